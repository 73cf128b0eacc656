#pragma once

#include <optional>

#include "bihom/operators.hpp"
#include "bihom/search.hpp"
#include "bihom/varieties.hpp"

namespace bihom {

// A construction whose input precondition or output certification fails.
struct AxiomViolation : Error {
  AxiomViolation(const std::string& what, Report rep)
      : Error(what + "\n" + to_text(rep)), report(std::move(rep)) {}
  Report report;
};

// [x,y] = mu(x,y) - (-1)^{|x||y|} mu(y,x). Computes the bracket only; with
// alpha != beta the untwisted bracket need not satisfy BiHom skew-symmetry,
// so no certification is attempted here.
Structure supercommutator(const Structure& s, const CheckOptions& opt = {});

// [x,y] = mu(x,y) - (-1)^{|x||y|} mu(alpha^{-1}beta(y), alpha beta^{-1}(x)).
Structure twisted_supercommutator(const Structure& s, const CheckOptions& opt = {});

// [x,y]_C = x o y - (-1)^{|x||y|} (alpha^{-1}beta(y)) o (alpha beta^{-1}(x)).
// Certified BiHom-Lie on return.
Structure subadjacent(const Structure& s, const CheckOptions& opt = {});

// x o' y = a(x) o b(y) for commuting product morphisms a, b of an ordinary
// (alpha = beta = id) pre-Lie superalgebra. Certified BiHom-pre-Lie.
Structure yau_twist_prelie(const Structure& s, const EvenMap& a, const EvenMap& b,
                           const CheckOptions& opt = {});

// Weight 0:  x o y = R(x) y - (-1)^{|x||y|} alpha^{-1}beta(y) R(alpha beta^{-1}(x))
// Weight -1: the same minus x y. Certified BiHom-pre-Lie.
Structure prelie_from_rb_assoc(const Structure& s, const OperatorSpec& R, const Rational& weight,
                               const CheckOptions& opt = {});

// The six-term bracket of a weight -1 Rota-Baxter associative structure.
// Certified BiHom-Lie; R re-certified as a weight -1 Rota-Baxter operator
// on the result.
Structure lie_from_rb_assoc_minus1(const Structure& s, const OperatorSpec& R,
                                   const CheckOptions& opt = {});

// x * y = R(x) o y - (-1)^{|x||y|} alpha^{-1}beta(y) o R(alpha beta^{-1}(x))
// for a weight-0 Rota-Baxter operator on a pre-Lie structure. Certified;
// R re-certified at weight 0 on the result.
Structure prelie_star_from_rb_prelie(const Structure& s, const OperatorSpec& R,
                                     const CheckOptions& opt = {});

// u o v = rho(T(u)) v on V, for a weight-0 O-operator of a Lie structure.
Structure prelie_from_o_op_lie(const Structure& s, const Bimodule& bm, const OperatorSpec& T,
                               const CheckOptions& opt = {});

// u > v = l(T(u)) v, u < v = (-1)^{|u||v|} r(T(v)) u on V, for a weight-0
// O-operator of an associative structure.
Structure ldend_from_o_op_assoc(const Structure& s, const Bimodule& bm, const OperatorSpec& T,
                                const CheckOptions& opt = {});

// u > v = l(T(u)) v, u < v = -r(T(u)) v on V for a weight-0 O-operator of a
// pre-Lie structure, plus the induced structure on the image T(V).
struct LdendFromPreLie {
  Structure on_module;          // L-dendriform structure on V
  Structure on_image;           // L-dendriform structure on T(V)
  MatrixQ image_basis;          // columns: echelon basis of T's column space
};
LdendFromPreLie ldend_from_o_op_prelie(const Structure& s, const Bimodule& bm,
                                       const OperatorSpec& T, const CheckOptions& opt = {});

// Vertical and horizontal pre-Lie structures, the transpose, and the Lie
// bracket of an L-dendriform structure. All four certified; the dualities
// vertical(transpose) = horizontal and horizontal(transpose) = vertical are
// verified exactly.
struct LdendDerived {
  Structure vertical;
  Structure horizontal;
  Structure transpose;
  Structure bracket;
};
LdendDerived ldend_derived(const Structure& s, const CheckOptions& opt = {});

enum class BimoduleTransferKind { PreLieToLie, LDendToAssoc, RBTwistedActions };

// PreLieToLie:      (l, r) over a pre-Lie structure -> rho = l - r over the
//                   sub-adjacent Lie structure.
// LDendToAssoc:     the four L-dendriform actions -> (l_succ + l_prec,
//                   r_succ + r_prec) over the horizontal product, which is
//                   the bimodule entering the untwisted (associative-form)
//                   O-operator identity.
// RBTwistedActions: actions twisted by a Rota-Baxter pair (R, R_V) over the
//                   L-dendriform structure x > y = R(x)y, x < y = xR(y).
Bimodule bimodule_transfer(const Bimodule& bm, BimoduleTransferKind kind,
                           const OperatorSpec* R = nullptr, const OperatorSpec* RV = nullptr,
                           const CheckOptions& opt = {});

// Bounded search for an invertible weight-0 O-operator of the regular
// bimodule; on success the compatible L-dendriform structure whose vertical
// pre-Lie equals s exactly. Empty result means inconclusive, not a disproof.
std::optional<Structure> compatible_ldend_exists(const Structure& s, const SearchSpec& spec,
                                                 const CheckOptions& opt = {});

} // namespace bihom
