#pragma once

#include "bihom/report.hpp"
#include "bihom/structure.hpp"

namespace bihom {

// Rank-3 action tensor: one endomorphism of V per algebra basis element.
struct Action {
  std::string name;
  std::vector<MatrixQ> m; // m[a] is dim(V) x dim(V)

  const MatrixQ& of_basis(Index a) const { return m[static_cast<size_t>(a)]; }
  MatrixQ of(const VectorQ& x) const; // sum_a x_a m[a]
};

// Parity compatibility: m[a](k, j) may be nonzero only when
// parity_V(k) = parity_A(a) + parity_V(j).
bool is_even_action(const SuperSpace& algebra, const SuperSpace& module_space, const Action& act);

// Bimodule / representation of a structure, with the actions the matching
// definition uses: l, r for the associative and pre-Lie cases, rho alone
// for the Lie case, and the four maps l_succ, r_succ, l_prec, r_prec for
// the L-dendriform case. An optional module product (two for the
// L-dendriform case) upgrades it to a bimodule K-superalgebra.
struct Bimodule {
  Structure base;
  SuperSpace space; // V
  std::vector<Action> actions;
  EvenMap alphaV;
  EvenMap betaV;
  std::vector<BilinearOp> products; // module product(s); may be empty

  Variety variety() const { return base.variety; }
  const Action& left() const { return actions.at(0); }
  const Action& right() const { return actions.at(1); }
  const Action& rho() const { return actions.at(0); }
  const Action& l_succ() const { return actions.at(0); }
  const Action& r_succ() const { return actions.at(1); }
  const Action& l_prec() const { return actions.at(2); }
  const Action& r_prec() const { return actions.at(3); }
  const BilinearOp& product() const { return products.at(0); }

  void validate() const;
};

// The structure acting on itself through its own multiplications, with the
// structure's own products carried along as the module product.
Bimodule regular_bimodule(const Structure& s);

// Adjoint representation of a Lie structure (rho = ad).
Bimodule adjoint_bimodule(const Structure& s);

// Checks the displayed bimodule conditions of the matching definition on
// all basis tuples (x, y in A; v in V).
Report check_bimodule(const Bimodule& bm, const CheckOptions& opt = {});

// Compatibility of the actions with the module product.
Report check_module_k_superalgebra(const Bimodule& bm, const CheckOptions& opt = {});

} // namespace bihom
