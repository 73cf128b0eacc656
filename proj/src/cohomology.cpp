#include "bihom/cohomology.hpp"

#include <functional>

#include "bihom/errors.hpp"

namespace bihom {

std::vector<WedgeTuple> wedge_tuples(const SuperSpace& space, int degree) {
  if (degree < 1) throw InvariantViolation("wedge_tuples: degree must be >= 1");
  const Index n = space.dim();
  std::vector<WedgeTuple> out;
  std::vector<Index> lead;
  // repetition allowed only on odd indices
  std::function<void(Index)> rec = [&](Index min_next) {
    if (static_cast<int>(lead.size()) == degree - 1) {
      for (Index last = 0; last < n; ++last) out.push_back(WedgeTuple{lead, last});
      return;
    }
    for (Index i = min_next; i < n; ++i) {
      lead.push_back(i);
      rec(space.parity_of(i) == 0 ? i + 1 : i);
      lead.pop_back();
    }
  };
  rec(0);
  return out;
}

Index CochainBasis::tuple_index(const std::vector<Index>& lead, Index last) const {
  auto it = lookup.find({lead, last});
  if (it == lookup.end()) throw InvariantViolation("cochain tuple not in the canonical enumeration");
  return it->second;
}

namespace {

int position_parity(const SuperSpace& algebra, const SuperSpace& module_space, const WedgeTuple& t,
                    Index out) {
  int p = module_space.parity_of(out);
  for (Index i : t.lead) p += algebra.parity_of(i);
  p += algebra.parity_of(t.last);
  return p % 2;
}

// Adds to `row` the expansion of f(g(x_1), ..., g(x_n)) on a canonical
// tuple, as a linear functional over the free coefficient space, evaluated
// at output index k.
void accumulate_twisted_row(VectorQ& row, const CochainBasis& basis, const SuperSpace& space,
                            const MatrixQ& g, const WedgeTuple& tuple, Index out,
                            const Rational& scale) {
  std::vector<Index> src = tuple.lead;
  src.push_back(tuple.last);
  const size_t n = src.size();
  std::vector<Index> combo(n, 0);
  std::function<void(size_t, Rational)> rec = [&](size_t slot, Rational acc) {
    if (slot == n) {
      std::vector<Index> lead(combo.begin(), combo.end() - 1);
      auto sorted = sort_wedge(space, std::move(lead));
      if (!sorted) return;
      const Index t = basis.tuple_index(sorted->indices, combo.back());
      row(basis.position(t, out)) += Rational(sorted->sign) * acc;
      return;
    }
    const Index col = src[slot];
    for (Index i = 0; i < g.rows(); ++i) {
      if (g(i, col).is_zero()) continue;
      combo[slot] = i;
      rec(slot + 1, acc * g(i, col));
    }
  };
  rec(0, scale);
}

} // namespace

CochainBasis cochain_basis(const Structure& s, const Bimodule& bm, int degree) {
  CochainBasis basis;
  basis.degree = degree;
  basis.tuples = wedge_tuples(s.space, degree);
  basis.module_dim = bm.space.dim();
  for (size_t t = 0; t < basis.tuples.size(); ++t)
    basis.lookup[{basis.tuples[t].lead, basis.tuples[t].last}] = static_cast<Index>(t);

  const Index free_dim = basis.free_dim();
  for (int want_parity = 0; want_parity <= 1; ++want_parity) {
    std::vector<Index> cols;
    for (size_t t = 0; t < basis.tuples.size(); ++t)
      for (Index k = 0; k < basis.module_dim; ++k)
        if (position_parity(s.space, bm.space, basis.tuples[t], k) == want_parity)
          cols.push_back(basis.position(static_cast<Index>(t), k));
    if (cols.empty()) continue;

    std::vector<VectorQ> rows;
    for (const auto& [structural, structuralV] :
         {std::pair{&s.alpha, &bm.alphaV}, std::pair{&s.beta, &bm.betaV}}) {
      // an identity pair constrains nothing
      if (is_zero(MatrixQ(structural->mat -
                          MatrixQ::Identity(structural->mat.rows(), structural->mat.cols()))) &&
          is_zero(MatrixQ(structuralV->mat -
                          MatrixQ::Identity(structuralV->mat.rows(), structuralV->mat.cols()))))
        continue;
      for (size_t t = 0; t < basis.tuples.size(); ++t)
        for (Index k = 0; k < basis.module_dim; ++k) {
          if (position_parity(s.space, bm.space, basis.tuples[t], k) != want_parity) continue;
          VectorQ row = VectorQ::Zero(free_dim);
          for (Index m = 0; m < basis.module_dim; ++m)
            if (!structuralV->mat(k, m).is_zero())
              row(basis.position(static_cast<Index>(t), m)) += structuralV->mat(k, m);
          accumulate_twisted_row(row, basis, s.space, structural->mat, basis.tuples[t], k,
                                 Rational(-1));
          rows.push_back(std::move(row));
        }
    }

    MatrixQ constraint(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c) constraint(static_cast<Index>(r), static_cast<Index>(c)) = rows[r](cols[c]);
    for (const auto& kvec : kernel_basis(constraint)) {
      VectorQ full = VectorQ::Zero(free_dim);
      for (size_t c = 0; c < cols.size(); ++c) full(cols[c]) = kvec(static_cast<Index>(c));
      basis.vectors.push_back(std::move(full));
      basis.parities.push_back(want_parity);
    }
  }
  return basis;
}

VectorQ eval_cochain(const CochainBasis& basis, const SuperSpace& space, const VectorQ& coeffs,
                     const std::vector<VectorQ>& args) {
  if (static_cast<int>(args.size()) != basis.degree)
    throw DimensionMismatch("eval_cochain: wrong number of arguments");
  VectorQ out = VectorQ::Zero(basis.module_dim);
  const size_t n = args.size();
  std::vector<Index> combo(n, 0);
  std::function<void(size_t, Rational)> rec = [&](size_t slot, Rational acc) {
    if (slot == n) {
      std::vector<Index> lead(combo.begin(), combo.end() - 1);
      auto sorted = sort_wedge(space, std::move(lead));
      if (!sorted) return;
      const Index t = basis.tuple_index(sorted->indices, combo.back());
      const Rational factor = Rational(sorted->sign) * acc;
      for (Index k = 0; k < basis.module_dim; ++k)
        out(k) += factor * coeffs(basis.position(t, k));
      return;
    }
    for (Index i = 0; i < args[slot].size(); ++i) {
      if (args[slot](i).is_zero()) continue;
      combo[slot] = i;
      rec(slot + 1, acc * args[slot](i));
    }
  };
  rec(0, Rational(1));
  return out;
}

namespace {

// matrix powers and per-basis twisted action matrices, computed once per
// coboundary matrix rather than per evaluation
struct CoboundaryContext {
  int n;
  MatrixQ A, B, AB, An1, Bn1, An1Bn1;
  std::vector<MatrixQ> left_tw;  // l(alpha^{n-1} beta^{n-1} e_i)
  std::vector<MatrixQ> right_tw; // r(beta^{n-1} e_i)

  CoboundaryContext(const Structure& s, const Bimodule& bm, int degree) : n(degree) {
    A = s.alpha.mat;
    B = s.beta.mat;
    AB = A * B;
    An1 = matrix_power(A, static_cast<unsigned>(n - 1));
    Bn1 = matrix_power(B, static_cast<unsigned>(n - 1));
    An1Bn1 = An1 * Bn1;
    for (Index i = 0; i < s.space.dim(); ++i) {
      left_tw.push_back(bm.left().of(VectorQ(An1Bn1.col(i))));
      right_tw.push_back(bm.right().of(VectorQ(Bn1.col(i))));
    }
  }
};

VectorQ coboundary_eval_ctx(const Structure& s, const Bimodule& bm, const CochainBasis& from,
                            const VectorQ& coeffs, int cochain_parity,
                            const std::vector<Index>& args, const CoboundaryContext& ctx) {
  const int n = from.degree;
  if (static_cast<int>(args.size()) != n + 1)
    throw DimensionMismatch("coboundary_eval: expected degree+1 arguments");
  const auto& sp = s.space;
  const auto& prod = s.product();

  std::vector<int> par(args.size());
  for (size_t i = 0; i < args.size(); ++i) par[i] = sp.parity_of(args[i]);
  auto par_sum = [&](int lo, int hi) { // |x_lo| + ... + |x_hi|, 1-based inclusive
    int acc = 0;
    for (int i = lo; i <= hi; ++i) acc += par[static_cast<size_t>(i - 1)];
    return acc;
  };
  auto sgn = [](int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); };
  auto ev = [&](int i) { return basis_vector(sp, args[static_cast<size_t>(i - 1)]); };
  auto arg = [&](int i) { return args[static_cast<size_t>(i - 1)]; };
  // applying a structure map to a basis vector is a column extraction
  auto col_of = [&](const MatrixQ& m, int i) { return VectorQ(m.col(arg(i))); };

  VectorQ out = VectorQ::Zero(bm.space.dim());

  // The four sums are the transcription of the Chevalley-Eilenberg
  // differential of the sub-adjacent Lie superalgebra with coefficients in
  // Hom(A, V), (x phi)(a) = l(x)phi(a) - (-1)^{|x||phi|}(phi(x a) - r(a)phi(x)).
  // Moving x_i out to the left multiplication crosses the cochain itself,
  // hence the |x_i||f| factor; the right-multiplication and product terms
  // carry the Koszul factor of moving x_i past x_{i+1}, ..., x_n.
  for (int i = 1; i <= n; ++i) {
    std::vector<VectorQ> rest;
    for (int j = 1; j <= n; ++j)
      if (j != i) rest.push_back(col_of(ctx.A, j));
    rest.push_back(ev(n + 1));
    const Rational sign =
        sgn(i + 1) *
        sgn(par[static_cast<size_t>(i - 1)] * (cochain_parity + par_sum(1, i - 1)));
    out += sign * (ctx.left_tw[static_cast<size_t>(arg(i))] * eval_cochain(from, sp, coeffs, rest));
  }

  for (int i = 1; i <= n; ++i) {
    std::vector<VectorQ> rest;
    for (int j = 1; j <= n; ++j)
      if (j != i) rest.push_back(col_of(ctx.B, j));
    rest.push_back(col_of(ctx.An1, i));
    const Rational sign = sgn(i + 1) * sgn(par[static_cast<size_t>(i - 1)] * par_sum(i + 1, n));
    out += sign * (ctx.right_tw[static_cast<size_t>(args[static_cast<size_t>(n)])] *
                   eval_cochain(from, sp, coeffs, rest));
  }

  for (int i = 1; i <= n; ++i) {
    std::vector<VectorQ> rest;
    for (int j = 1; j <= n; ++j)
      if (j != i) rest.push_back(col_of(ctx.AB, j));
    rest.push_back(apply_bilinear(prod, col_of(ctx.An1, i), ev(n + 1)));
    const Rational sign = sgn(i + 1) * sgn(par[static_cast<size_t>(i - 1)] * par_sum(i + 1, n));
    out -= sign * eval_cochain(from, sp, coeffs, rest);
  }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // [beta(x_i), alpha(x_j)]_C expands without inverses:
      // beta(x_i) o alpha(x_j) - (-1)^{|x_i||x_j|} beta(x_j) o alpha(x_i)
      VectorQ bracket =
          apply_bilinear(prod, col_of(ctx.B, i), col_of(ctx.A, j)) -
          sgn(par[static_cast<size_t>(i - 1)] * par[static_cast<size_t>(j - 1)]) *
              apply_bilinear(prod, col_of(ctx.B, j), col_of(ctx.A, i));
      std::vector<VectorQ> rest;
      rest.push_back(std::move(bracket));
      for (int m = 1; m <= n; ++m)
        if (m != i && m != j) rest.push_back(col_of(ctx.AB, m));
      rest.push_back(col_of(ctx.B, n + 1));
      const int gamma = par[static_cast<size_t>(i - 1)] * par_sum(1, i - 1) +
                        par[static_cast<size_t>(j - 1)] * par_sum(1, j - 1) +
                        par[static_cast<size_t>(i - 1)] * par[static_cast<size_t>(j - 1)];
      out += sgn(i + j) * sgn(gamma) * eval_cochain(from, sp, coeffs, rest);
    }
  return out;
}

} // namespace

VectorQ coboundary_eval(const Structure& s, const Bimodule& bm, const CochainBasis& from,
                        const VectorQ& coeffs, int cochain_parity, const std::vector<Index>& args) {
  const CoboundaryContext ctx(s, bm, from.degree);
  return coboundary_eval_ctx(s, bm, from, coeffs, cochain_parity, args, ctx);
}

MatrixQ coboundary_matrix(const Structure& s, const Bimodule& bm, const CochainBasis& from,
                          const CochainBasis& to) {
  if (to.degree != from.degree + 1)
    throw DimensionMismatch("coboundary_matrix: target basis must have degree+1");
  const CoboundaryContext ctx(s, bm, from.degree);
  MatrixQ image(to.free_dim(), from.dim());
  for (Index col = 0; col < from.dim(); ++col) {
    const VectorQ& f = from.vectors[static_cast<size_t>(col)];
    for (size_t t = 0; t < to.tuples.size(); ++t) {
      std::vector<Index> args = to.tuples[t].lead;
      args.push_back(to.tuples[t].last);
      VectorQ value =
          coboundary_eval_ctx(s, bm, from, f, from.parities[static_cast<size_t>(col)], args, ctx);
      for (Index k = 0; k < to.module_dim; ++k)
        image(to.position(static_cast<Index>(t), k), col) = value(k);
    }
  }

  // express each image in the basis of C^{n+1}; failure here would mean the
  // coboundary left the compatible subspace
  MatrixQ basis_matrix(to.free_dim(), to.dim());
  for (Index c = 0; c < to.dim(); ++c) basis_matrix.col(c) = to.vectors[static_cast<size_t>(c)];
  const LinearSolver<Rational> solver(basis_matrix);
  MatrixQ d(to.dim(), from.dim());
  for (Index col = 0; col < from.dim(); ++col) {
    VectorQ coords;
    if (!solver.solve(VectorQ(image.col(col)), coords))
      throw InvariantViolation("coboundary image violates the alpha/beta compatibility "
                               "constraints (well-definedness)");
    for (Index r = 0; r < to.dim(); ++r)
      if (!coords(r).is_zero() &&
          to.parities[static_cast<size_t>(r)] != from.parities[static_cast<size_t>(col)])
        throw InvariantViolation("coboundary mixed cochain parities");
    d.col(col) = coords;
  }
  return d;
}

CochainComplex build_complex(const Structure& s, const Bimodule& bm, int max_degree) {
  if (s.variety != Variety::PreLie)
    throw VarietyMismatch("build_complex: cohomology is defined for pre-Lie structures");
  if (max_degree < 1) throw InvariantViolation("build_complex: max degree must be >= 1");
  if (!is_invertible(s.alpha.mat) || !is_invertible(s.beta.mat))
    throw InvertibilityRequired("build_complex: alpha and beta must be invertible");
  CochainComplex complex;
  complex.s = s;
  complex.bm = bm;
  complex.max_degree = max_degree;
  for (int n = 1; n <= max_degree + 1; ++n) complex.bases.push_back(cochain_basis(s, bm, n));
  for (int n = 1; n <= max_degree; ++n)
    complex.d.push_back(coboundary_matrix(s, bm, complex.basis(n), complex.basis(n + 1)));
  return complex;
}

namespace {

// zero-skipping product; the coboundary matrices are sparse
MatrixQ sparse_product(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out = MatrixQ::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < b.rows(); ++k) {
      if (b(k, j).is_zero()) continue;
      for (Index i = 0; i < a.rows(); ++i)
        if (!a(i, k).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

} // namespace

Report verify_d_squared(const CochainComplex& complex) {
  Report rep;
  rep.subject = "coboundary squares to zero";
  for (int n = 1; n + 1 <= complex.max_degree; ++n) {
    ItemRecorder rec("d.squared.degree." + std::to_string(n), 10);
    const MatrixQ square = sparse_product(complex.boundary(n + 1), complex.boundary(n));
    for (Index col = 0; col < square.cols(); ++col) rec.record({n, col}, square.col(col));
    rep.items.push_back(rec.take());
  }
  return rep;
}

std::vector<CohomologyRow> cohomology_dims(const CochainComplex& complex) {
  std::vector<CohomologyRow> rows;
  for (int n = 1; n <= complex.max_degree; ++n) {
    for (int parity = 0; parity <= 1; ++parity) {
      CohomologyRow row;
      row.degree = n;
      row.parity = parity;
      std::vector<Index> cols;
      const auto& basis = complex.basis(n);
      for (Index c = 0; c < basis.dim(); ++c)
        if (basis.parities[static_cast<size_t>(c)] == parity) cols.push_back(c);
      row.dim_c = static_cast<Index>(cols.size());

      const MatrixQ& dn = complex.boundary(n);
      MatrixQ restricted(dn.rows(), static_cast<Index>(cols.size()));
      for (size_t c = 0; c < cols.size(); ++c) restricted.col(static_cast<Index>(c)) = dn.col(cols[c]);
      row.dim_z = row.dim_c - rank(restricted);

      if (n >= 2) {
        const auto& prev = complex.basis(n - 1);
        const MatrixQ& dprev = complex.boundary(n - 1);
        std::vector<Index> pcols;
        for (Index c = 0; c < prev.dim(); ++c)
          if (prev.parities[static_cast<size_t>(c)] == parity) pcols.push_back(c);
        MatrixQ prestricted(dprev.rows(), static_cast<Index>(pcols.size()));
        for (size_t c = 0; c < pcols.size(); ++c)
          prestricted.col(static_cast<Index>(c)) = dprev.col(pcols[c]);
        row.dim_b = rank(prestricted);
      }
      row.dim_h = row.dim_z - row.dim_b;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<CohomologyRow> cohomology_dims(const Structure& s, const Bimodule& bm, int n_max) {
  return cohomology_dims(build_complex(s, bm, n_max));
}

} // namespace bihom
