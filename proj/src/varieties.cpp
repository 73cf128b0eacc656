#include "bihom/varieties.hpp"

#include "bihom/errors.hpp"

namespace bihom {

namespace {

int koszul(const SuperSpace& sp, Index i, Index j) {
  return (sp.parity_of(i) * sp.parity_of(j)) == 1 ? -1 : 1;
}

} // namespace

Report check_even(const EvenMap& map, const CheckOptions& opt) {
  if (map.mat.rows() != map.codomain.dim() || map.mat.cols() != map.domain.dim())
    throw DimensionMismatch("check_even: matrix shape does not match spaces");
  Report rep;
  rep.subject = "even linear map";
  ItemRecorder rec("parity.preserving", opt.witness_cap);
  for (Index j = 0; j < map.mat.cols(); ++j)
    for (Index i = 0; i < map.mat.rows(); ++i)
      if (!map.mat(i, j).is_zero() && map.codomain.parity_of(i) != map.domain.parity_of(j)) {
        VectorQ res = VectorQ::Zero(1);
        res(0) = map.mat(i, j);
        rec.record({i, j}, res);
      }
  rep.items.push_back(rec.take());
  return rep;
}

Report check_structure_compat(const Structure& s, const CheckOptions& opt) {
  Report rep;
  rep.subject = "structure maps of a " + variety_name(s.variety) + " structure";
  const Index n = s.space.dim();
  const MatrixQ& A = s.alpha.mat;
  const MatrixQ& B = s.beta.mat;

  {
    ItemRecorder rec("alpha.beta.commute", opt.witness_cap);
    const MatrixQ d = A * B - B * A;
    for (Index j = 0; j < n; ++j) rec.record({j}, d.col(j));
    rep.items.push_back(rec.take());
  }
  for (const auto& p : s.products) {
    ItemRecorder ra("alpha.multiplicative." + p.name, opt.witness_cap);
    ItemRecorder rb("beta.multiplicative." + p.name, opt.witness_cap);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        ra.record({i, j}, VectorQ(A * p.mul_basis(i, j) - apply_bilinear(p, A.col(i), A.col(j))));
        rb.record({i, j}, VectorQ(B * p.mul_basis(i, j) - apply_bilinear(p, B.col(i), B.col(j))));
      }
    rep.items.push_back(ra.take());
    rep.items.push_back(rb.take());
  }
  return rep;
}

Report check_bihom_associative(const Structure& s, const CheckOptions& opt) {
  if (s.variety != Variety::Associative)
    throw VarietyMismatch("check_bihom_associative: structure is tagged " + variety_name(s.variety));
  Report rep = check_structure_compat(s, opt);
  rep.subject = "BiHom-associative superalgebra";
  const Index n = s.space.dim();
  const auto& p = s.product();
  const MatrixQ& A = s.alpha.mat;
  const MatrixQ& B = s.beta.mat;
  ItemRecorder rec("bihom.associativity", opt.witness_cap);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        rec.record({i, j, k}, VectorQ(apply_bilinear(p, A.col(i), p.mul_basis(j, k)) -
                                      apply_bilinear(p, p.mul_basis(i, j), B.col(k))));
  rep.items.push_back(rec.take());
  return rep;
}

namespace {

// Shared by the Lie checker and the Lie-admissible checker.
CheckItem jacobi_item(const SuperSpace& sp, const BilinearOp& br, const MatrixQ& A,
                      const MatrixQ& B, const CheckOptions& opt, const std::string& name) {
  const Index n = sp.dim();
  const MatrixQ B2 = B * B;
  ItemRecorder rec(name, opt.witness_cap);
  auto term = [&](Index x, Index y, Index z) {
    VectorQ inner = apply_bilinear(br, B.col(y), A.col(z));
    VectorQ v = apply_bilinear(br, B2.col(x), inner);
    return koszul(sp, x, z) == 1 ? v : VectorQ(-v);
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        rec.record({i, j, k}, VectorQ(term(i, j, k) + term(j, k, i) + term(k, i, j)));
  return rec.take();
}

} // namespace

Report check_bihom_lie(const Structure& s, const CheckOptions& opt) {
  if (s.variety != Variety::Lie)
    throw VarietyMismatch("check_bihom_lie: structure is tagged " + variety_name(s.variety));
  Report rep = check_structure_compat(s, opt);
  rep.subject = "BiHom-Lie superalgebra";
  const Index n = s.space.dim();
  const auto& br = s.product();
  const MatrixQ& A = s.alpha.mat;
  const MatrixQ& B = s.beta.mat;

  ItemRecorder skew("bihom.super.skew.symmetry", opt.witness_cap);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      VectorQ lhs = apply_bilinear(br, B.col(i), A.col(j));
      VectorQ rhs = apply_bilinear(br, B.col(j), A.col(i));
      skew.record({i, j}, koszul(s.space, i, j) == 1 ? VectorQ(lhs + rhs) : VectorQ(lhs - rhs));
    }
  rep.items.push_back(skew.take());
  rep.items.push_back(jacobi_item(s.space, br, A, B, opt, "bihom.super.jacobi"));
  rep.notes.push_back("super-Jacobi expanded as the three cyclic rotations of (x,y,z), "
                      "each with sign (-1)^{|x||z|}");
  return rep;
}

Report check_bihom_prelie(const Structure& s, const CheckOptions& opt) {
  if (s.variety != Variety::PreLie)
    throw VarietyMismatch("check_bihom_prelie: structure is tagged " + variety_name(s.variety));
  Report rep = check_structure_compat(s, opt);
  rep.subject = "BiHom-pre-Lie superalgebra";
  const Index n = s.space.dim();
  const auto& p = s.product();
  const MatrixQ& A = s.alpha.mat;
  const MatrixQ& B = s.beta.mat;
  const MatrixQ AB = A * B;

  // (beta(x) o alpha(y)) o beta(z) - alphabeta(x) o (alpha(y) o z)
  auto assoc = [&](Index x, Index y, Index z) {
    VectorQ left = apply_bilinear(p, apply_bilinear(p, B.col(x), A.col(y)), B.col(z));
    VectorQ right = apply_bilinear(p, AB.col(x), apply_bilinear(p, A.col(y), basis_vector(s.space, z)));
    return VectorQ(left - right);
  };
  ItemRecorder rec("bihom.prelie.identity", opt.witness_cap);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        VectorQ mirrored = assoc(j, i, k);
        rec.record({i, j, k}, koszul(s.space, i, j) == 1 ? VectorQ(assoc(i, j, k) - mirrored)
                                                           : VectorQ(assoc(i, j, k) + mirrored));
      }
  rep.items.push_back(rec.take());
  return rep;
}

Report check_bihom_ldendriform(const Structure& s, const CheckOptions& opt) {
  if (s.variety != Variety::LDendriform)
    throw VarietyMismatch("check_bihom_ldendriform: structure is tagged " + variety_name(s.variety));
  Report rep = check_structure_compat(s, opt);
  rep.subject = "BiHom-L-dendriform superalgebra";
  const Index n = s.space.dim();
  const auto& gt = s.succ();
  const auto& lt = s.prec();
  const MatrixQ& A = s.alpha.mat;
  const MatrixQ& B = s.beta.mat;
  const MatrixQ AB = A * B;

  ItemRecorder r1("ldendriform.identity.1", opt.witness_cap);
  ItemRecorder r2("ldendriform.identity.2", opt.witness_cap);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Rational sg(koszul(s.space, i, j));
      for (Index k = 0; k < n; ++k) {
        const VectorQ z = basis_vector(s.space, k);
        const VectorQ bx = B.col(i), by = B.col(j), ax = A.col(i), ay = A.col(j);
        const VectorQ abx = AB.col(i), aby = AB.col(j), bz = B.col(k);

        VectorQ res1 = apply_bilinear(gt, abx, apply_bilinear(gt, ay, z)) -
                       apply_bilinear(gt, apply_bilinear(gt, bx, ay), bz) -
                       apply_bilinear(gt, apply_bilinear(lt, bx, ay), bz) -
                       sg * apply_bilinear(gt, aby, apply_bilinear(gt, ax, z)) +
                       sg * apply_bilinear(gt, apply_bilinear(lt, by, ax), bz) +
                       sg * apply_bilinear(gt, apply_bilinear(gt, by, ax), bz);
        r1.record({i, j, k}, res1);

        VectorQ res2 = apply_bilinear(gt, abx, apply_bilinear(lt, ay, z)) -
                       apply_bilinear(lt, apply_bilinear(gt, bx, ay), bz) -
                       sg * apply_bilinear(lt, aby, apply_bilinear(gt, ax, z)) -
                       sg * apply_bilinear(lt, aby, apply_bilinear(lt, ax, z)) +
                       sg * apply_bilinear(lt, apply_bilinear(lt, by, ax), bz);
        r2.record({i, j, k}, res2);
      }
    }
  rep.items.push_back(r1.take());
  rep.items.push_back(r2.take());
  return rep;
}

BilinearOp commutator_bilinear(const BilinearOp& op, const MatrixQ& twist_left,
                               const MatrixQ& twist_right, const std::string& name) {
  BilinearOp out = BilinearOp::zero(name, op.space);
  const Index n = op.space.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      VectorQ v = op.mul_basis(i, j) -
                  Rational(koszul(op.space, i, j)) *
                      apply_bilinear(op, twist_left * basis_vector(op.space, j),
                                     twist_right * basis_vector(op.space, i));
      for (Index k = 0; k < n; ++k) out.set_coeff(i, j, k, v(k));
    }
  return out;
}

Report check_lie_admissible(const Structure& s, const CheckOptions& opt) {
  if (s.variety != Variety::Associative && s.variety != Variety::LieAdmissible)
    throw VarietyMismatch("check_lie_admissible: structure is tagged " + variety_name(s.variety));
  MatrixQ ainv, binv;
  try {
    ainv = invert(s.alpha.mat);
    binv = invert(s.beta.mat);
  } catch (const SingularMatrix&) {
    throw InvertibilityRequired("check_lie_admissible: alpha and beta must be invertible");
  }
  Report rep = check_structure_compat(s, opt);
  rep.subject = "BiHom-Lie admissible superalgebra";
  const BilinearOp bracket =
      commutator_bilinear(s.product(), MatrixQ(ainv * s.beta.mat), MatrixQ(s.alpha.mat * binv),
                          "twisted.supercommutator");
  rep.items.push_back(
      jacobi_item(s.space, bracket, s.alpha.mat, s.beta.mat, opt, "twisted.supercommutator.jacobi"));
  rep.notes.push_back("bracket [x,y] = mu(x,y) - (-1)^{|x||y|} mu(alpha^{-1}beta(y), alpha beta^{-1}(x))");
  return rep;
}

Report check_variety(const Structure& s, const CheckOptions& opt) {
  switch (s.variety) {
  case Variety::Associative: return check_bihom_associative(s, opt);
  case Variety::Lie: return check_bihom_lie(s, opt);
  case Variety::PreLie: return check_bihom_prelie(s, opt);
  case Variety::LDendriform: return check_bihom_ldendriform(s, opt);
  case Variety::LieAdmissible: return check_lie_admissible(s, opt);
  }
  throw UnknownName("check_variety: unknown variety");
}

} // namespace bihom
