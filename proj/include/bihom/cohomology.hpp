#pragma once

#include <map>

#include "bihom/bimodule.hpp"

namespace bihom {

// Basis tuple of the n-cochain domain: a super-exterior monomial in the
// first n-1 slots (strictly increasing on even indices, weakly increasing
// on odd ones) and one unconstrained last slot.
struct WedgeTuple {
  std::vector<Index> lead;
  Index last = 0;
};

std::vector<WedgeTuple> wedge_tuples(const SuperSpace& space, int degree);

// Basis of the alpha/beta-compatible cochain space C^n, as coefficient
// vectors over the free space indexed by (tuple, module basis index).
struct CochainBasis {
  int degree = 1;
  std::vector<WedgeTuple> tuples;
  Index module_dim = 0;
  std::vector<VectorQ> vectors;
  std::vector<int> parities; // one per basis vector

  Index free_dim() const { return static_cast<Index>(tuples.size()) * module_dim; }
  Index dim() const { return static_cast<Index>(vectors.size()); }
  Index position(Index tuple_idx, Index out) const { return tuple_idx * module_dim + out; }
  Index tuple_index(const std::vector<Index>& lead, Index last) const;

  std::map<std::pair<std::vector<Index>, Index>, Index> lookup;
};

CochainBasis cochain_basis(const Structure& s, const Bimodule& bm, int degree);

// Evaluate a cochain on argument vectors (multilinear expansion; the lead
// arguments are sorted into canonical wedge order with the Koszul sign).
VectorQ eval_cochain(const CochainBasis& basis, const SuperSpace& space, const VectorQ& coeffs,
                     const std::vector<VectorQ>& args);

// Literal evaluation of the coboundary formula on homogeneous basis
// arguments, in any order. The signs follow the Chevalley-Eilenberg
// transcription (the unique reading that squares to zero; see the l/r sums
// in the implementation), so the cochain's own parity enters.
VectorQ coboundary_eval(const Structure& s, const Bimodule& bm, const CochainBasis& from,
                        const VectorQ& coeffs, int cochain_parity, const std::vector<Index>& args);

MatrixQ coboundary_matrix(const Structure& s, const Bimodule& bm, const CochainBasis& from,
                          const CochainBasis& to);

struct CochainComplex {
  Structure s;
  Bimodule bm;
  int max_degree = 1;
  std::vector<CochainBasis> bases; // C^1 .. C^{max_degree+1}
  std::vector<MatrixQ> d;          // matrices of the coboundary, C^n -> C^{n+1}

  const CochainBasis& basis(int n) const { return bases.at(static_cast<size_t>(n - 1)); }
  const MatrixQ& boundary(int n) const { return d.at(static_cast<size_t>(n - 1)); }
};

CochainComplex build_complex(const Structure& s, const Bimodule& bm, int max_degree);

// D_{n+1} D_n = 0, exactly, for every stored consecutive pair.
Report verify_d_squared(const CochainComplex& complex);

struct CohomologyRow {
  int degree = 1;
  int parity = 0;
  Index dim_c = 0;
  Index dim_z = 0;
  Index dim_b = 0;
  Index dim_h = 0;
};

// Per degree and parity. H^1 is reported as ker D_1: no degree-0 cochains
// are defined, so no quotient is applied in degree one.
std::vector<CohomologyRow> cohomology_dims(const CochainComplex& complex);
std::vector<CohomologyRow> cohomology_dims(const Structure& s, const Bimodule& bm, int n_max);

} // namespace bihom
