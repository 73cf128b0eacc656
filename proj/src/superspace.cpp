#include "bihom/superspace.hpp"

#include <algorithm>
#include <set>

#include "bihom/errors.hpp"

namespace bihom {

SuperSpace SuperSpace::make(std::vector<std::string> even, std::vector<std::string> odd) {
  SuperSpace s;
  s.names = std::move(even);
  const size_t even_count = s.names.size();
  s.names.insert(s.names.end(), odd.begin(), odd.end());
  s.parity.assign(s.names.size(), 0);
  for (size_t i = even_count; i < s.names.size(); ++i) s.parity[i] = 1;
  std::set<std::string> seen(s.names.begin(), s.names.end());
  if (seen.size() != s.names.size())
    throw InvariantViolation("duplicate basis name in super space");
  return s;
}

Index SuperSpace::even_dim() const {
  return static_cast<Index>(std::count(parity.begin(), parity.end(), 0));
}

std::optional<Index> SuperSpace::index_of(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Index>(i);
  return std::nullopt;
}

VectorQ basis_vector(const SuperSpace& space, Index i) {
  VectorQ v = VectorQ::Zero(space.dim());
  v(i) = Rational(1);
  return v;
}

EvenMap identity_map(const SuperSpace& space) {
  return EvenMap{space, space, MatrixQ::Identity(space.dim(), space.dim())};
}

EvenMap compose(const EvenMap& f, const EvenMap& g) {
  if (!(g.codomain == f.domain)) throw DimensionMismatch("compose: domain mismatch");
  return EvenMap{g.domain, f.codomain, f.mat * g.mat};
}

EvenMap map_inverse(const EvenMap& f) {
  if (!(f.domain == f.codomain)) throw DimensionMismatch("map_inverse: endomorphism required");
  try {
    return EvenMap{f.domain, f.codomain, invert(f.mat)};
  } catch (const SingularMatrix&) {
    throw InvertibilityRequired("even map is not invertible");
  }
}

bool maps_equal(const EvenMap& f, const EvenMap& g) {
  return f.domain == g.domain && f.codomain == g.codomain && is_zero(MatrixQ(f.mat - g.mat));
}

bool is_even_matrix(const SuperSpace& domain, const SuperSpace& codomain, const MatrixQ& m) {
  if (m.rows() != codomain.dim() || m.cols() != domain.dim()) return false;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero() && codomain.parity_of(i) != domain.parity_of(j)) return false;
  return true;
}

BilinearOp BilinearOp::zero(std::string name, const SuperSpace& space) {
  BilinearOp op;
  op.name = std::move(name);
  op.space = space;
  op.c.assign(static_cast<size_t>(space.dim()), MatrixQ::Zero(space.dim(), space.dim()));
  return op;
}

bool BilinearOp::is_zero() const {
  for (const auto& m : c)
    if (!bihom::is_zero(m)) return false;
  return true;
}

bool BilinearOp::same_constants(const BilinearOp& other) const {
  if (!(space == other.space) || c.size() != other.c.size()) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (!bihom::is_zero(MatrixQ(c[i] - other.c[i]))) return false;
  return true;
}

bool is_even_bilinear(const BilinearOp& op) {
  const auto& sp = op.space;
  for (Index i = 0; i < sp.dim(); ++i)
    for (Index j = 0; j < sp.dim(); ++j)
      for (Index k = 0; k < sp.dim(); ++k)
        if (!op.coeff(i, j, k).is_zero() &&
            sp.parity_of(k) != ((sp.parity_of(i) + sp.parity_of(j)) % 2))
          return false;
  return true;
}

VectorQ apply_bilinear(const BilinearOp& op, const VectorQ& u, const VectorQ& v) {
  if (u.size() != op.space.dim() || v.size() != op.space.dim())
    throw DimensionMismatch("apply_bilinear: vector dimension mismatch");
  VectorQ out = VectorQ::Zero(op.space.dim());
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i).is_zero()) continue;
    out += u(i) * (op.c[static_cast<size_t>(i)] * v);
  }
  return out;
}

int koszul_sign(std::span<const int> parities, std::span<const Index> perm) {
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) {
        // adjacent-swap factor -(-1)^{|x||y|}, multiplied over inversions
        const int p = parities[static_cast<size_t>(perm[i])] * parities[static_cast<size_t>(perm[j])];
        sign *= (p == 1) ? 1 : -1;
      }
  return sign;
}

std::optional<SortedWedge> sort_wedge(const SuperSpace& space, std::vector<Index> indices) {
  int sign = 1;
  // insertion sort; each adjacent swap of (a, b) contributes -(-1)^{|a||b|}
  for (size_t i = 1; i < indices.size(); ++i) {
    size_t j = i;
    while (j > 0 && indices[j - 1] > indices[j]) {
      const int p = space.parity_of(indices[j - 1]) * space.parity_of(indices[j]);
      sign *= (p == 1) ? 1 : -1;
      std::swap(indices[j - 1], indices[j]);
      --j;
    }
  }
  for (size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] == indices[i] && space.parity_of(indices[i]) == 0) return std::nullopt;
  return SortedWedge{sign, std::move(indices)};
}

} // namespace bihom
