#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bihom/linalg.hpp"

namespace bihom {

// Z2-graded vector space with a fixed homogeneous basis. The basis is
// canonically ordered: all even elements first, then all odd ones. This
// ordering is part of the file format and of every enumeration below.
struct SuperSpace {
  std::vector<std::string> names;
  std::vector<int> parity; // 0 or 1, nondecreasing

  static SuperSpace make(std::vector<std::string> even, std::vector<std::string> odd);

  Index dim() const { return static_cast<Index>(names.size()); }
  Index even_dim() const;
  int parity_of(Index i) const { return parity[static_cast<size_t>(i)]; }
  std::optional<Index> index_of(std::string_view name) const;

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;
};

VectorQ basis_vector(const SuperSpace& space, Index i);

// Parity-preserving linear map between graded spaces, stored densely.
struct EvenMap {
  SuperSpace domain;
  SuperSpace codomain;
  MatrixQ mat; // codomain.dim() x domain.dim()

  VectorQ operator()(const VectorQ& v) const { return mat * v; }
};

EvenMap identity_map(const SuperSpace& space);
EvenMap compose(const EvenMap& f, const EvenMap& g); // f after g
EvenMap map_inverse(const EvenMap& f);               // throws InvertibilityRequired
bool maps_equal(const EvenMap& f, const EvenMap& g);

// True when every cross-parity entry vanishes.
bool is_even_matrix(const SuperSpace& domain, const SuperSpace& codomain, const MatrixQ& m);

// Even bilinear operation given by structure constants:
// e_i * e_j = sum_k c[i](k, j) e_k.
struct BilinearOp {
  std::string name;
  SuperSpace space;
  std::vector<MatrixQ> c;

  static BilinearOp zero(std::string name, const SuperSpace& space);

  VectorQ mul_basis(Index i, Index j) const { return c[static_cast<size_t>(i)].col(j); }
  Rational coeff(Index i, Index j, Index k) const { return c[static_cast<size_t>(i)](k, j); }
  void set_coeff(Index i, Index j, Index k, const Rational& v) { c[static_cast<size_t>(i)](k, j) = v; }
  bool is_zero() const;
  bool same_constants(const BilinearOp& other) const;
};

// c[i][j][k] may be nonzero only when parity(k) = parity(i) + parity(j).
bool is_even_bilinear(const BilinearOp& op);

// Bilinear extension to coordinate vectors.
VectorQ apply_bilinear(const BilinearOp& op, const VectorQ& u, const VectorQ& v);

// Sign of a permutation of homogeneous elements in the super-exterior
// convention: an adjacent swap of x, y contributes -(-1)^{|x||y|}.
// perm[i] is the index of the element placed at position i.
int koszul_sign(std::span<const int> parities, std::span<const Index> perm);

// Sort wedge indices into canonical (weakly increasing) order, accumulating
// the Koszul sign. Returns nullopt when the monomial vanishes (a repeated
// even index).
struct SortedWedge {
  int sign;
  std::vector<Index> indices;
};
std::optional<SortedWedge> sort_wedge(const SuperSpace& space, std::vector<Index> indices);

} // namespace bihom
