#include "bihom/operators.hpp"

#include "bihom/errors.hpp"

namespace bihom {

std::string operator_kind_name(OperatorKind k) {
  switch (k) {
  case OperatorKind::RotaBaxter: return "rota_baxter";
  case OperatorKind::OOperator: return "o_operator";
  case OperatorKind::ExtendedOOperator: return "extended_o_operator";
  case OperatorKind::ModuleRotaBaxter: return "module_rota_baxter";
  }
  return "?";
}

OperatorKind operator_kind_from_name(std::string_view name) {
  if (name == "rota_baxter") return OperatorKind::RotaBaxter;
  if (name == "o_operator") return OperatorKind::OOperator;
  if (name == "extended_o_operator") return OperatorKind::ExtendedOOperator;
  if (name == "module_rota_baxter") return OperatorKind::ModuleRotaBaxter;
  throw UnknownName("unknown operator kind '" + std::string(name) + "'");
}

OperatorSpec rota_baxter_spec(std::string name, EvenMap map, Rational weight) {
  OperatorSpec op;
  op.kind = OperatorKind::RotaBaxter;
  op.name = std::move(name);
  op.map = std::move(map);
  op.weight = std::move(weight);
  return op;
}

namespace {

int koszul(const SuperSpace& a, Index i, const SuperSpace& b, Index j) {
  return (a.parity_of(i) * b.parity_of(j)) == 1 ? -1 : 1;
}

void commutation_items(Report& rep, const std::string& opname, const EvenMap& structural,
                       const std::string& structural_name, const MatrixQ& t, const MatrixQ& tv,
                       const CheckOptions& opt) {
  // structural o T = T o structural_V, one column per module basis vector
  ItemRecorder rec(opname + ".commutes." + structural_name, opt.witness_cap);
  const MatrixQ d = structural.mat * t - t * tv;
  for (Index j = 0; j < d.cols(); ++j) rec.record({j}, d.col(j));
  rep.items.push_back(rec.take());
}

} // namespace

Report check_rota_baxter(const Structure& s, const OperatorSpec& op, const CheckOptions& opt) {
  if (op.kind != OperatorKind::RotaBaxter)
    throw VarietyMismatch("check_rota_baxter: operator '" + op.name + "' is tagged " +
                          operator_kind_name(op.kind));
  const MatrixQ& R = op.map.mat;
  if (R.rows() != s.space.dim() || R.cols() != s.space.dim())
    throw DimensionMismatch("check_rota_baxter: operator is not an endomorphism of the space");
  Report rep;
  rep.subject = "Rota-Baxter operator '" + op.name + "' of weight " + to_string(op.weight);
  commutation_items(rep, op.name, s.alpha, "alpha", R, s.alpha.mat, opt);
  commutation_items(rep, op.name, s.beta, "beta", R, s.beta.mat, opt);
  const Index n = s.space.dim();
  for (const auto& p : s.products) {
    ItemRecorder rec("rota.baxter." + p.name, opt.witness_cap);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const VectorQ ei = basis_vector(s.space, i), ej = basis_vector(s.space, j);
        VectorQ inner = apply_bilinear(p, R * ei, ej) + apply_bilinear(p, ei, R * ej) +
                        op.weight * p.mul_basis(i, j);
        rec.record({i, j}, VectorQ(apply_bilinear(p, R * ei, R * ej) - R * inner));
      }
    rep.items.push_back(rec.take());
  }
  return rep;
}

Report check_o_operator(const Structure& s, const Bimodule& bm, const OperatorSpec& op,
                        const CheckOptions& opt) {
  if (op.kind != OperatorKind::OOperator && op.kind != OperatorKind::RotaBaxter)
    throw VarietyMismatch("check_o_operator: operator '" + op.name + "' is tagged " +
                          operator_kind_name(op.kind));
  if (bm.variety() != s.variety)
    throw VarietyMismatch("check_o_operator: bimodule variety does not match the structure");
  if (!(bm.base.space == s.space))
    throw DimensionMismatch("check_o_operator: bimodule lives over a different structure");
  const MatrixQ& T = op.map.mat; // V -> A
  if (T.rows() != s.space.dim() || T.cols() != bm.space.dim())
    throw DimensionMismatch("check_o_operator: map must go from the module to the algebra");
  if (!op.weight.is_zero() && bm.products.empty())
    throw MissingModuleProduct("check_o_operator: weight " + to_string(op.weight) +
                               " needs a module product");

  const bool twisted = s.variety == Variety::Lie || s.variety == Variety::PreLie;
  MatrixQ P, Q; // alphaV^{-1} betaV and alphaV betaV^{-1}
  if (twisted) {
    try {
      P = invert(bm.alphaV.mat) * bm.betaV.mat;
      Q = bm.alphaV.mat * invert(bm.betaV.mat);
    } catch (const SingularMatrix&) {
      throw InvertibilityRequired("check_o_operator: alphaV, betaV must be invertible for the " +
                                  variety_name(s.variety) + " identity");
    }
  }

  Report rep;
  rep.subject = "super O-operator '" + op.name + "' of weight " + to_string(op.weight) + " (" +
                variety_name(s.variety) + ")";
  commutation_items(rep, op.name, s.alpha, "alpha", T, bm.alphaV.mat, opt);
  commutation_items(rep, op.name, s.beta, "beta", T, bm.betaV.mat, opt);

  const Index nV = bm.space.dim();
  auto ev = [&](Index i) { return basis_vector(bm.space, i); };

  auto identity_item = [&](const std::string& name, const BilinearOp& prod, const Action& left,
                           const Action& right, const BilinearOp* modprod, int right_sign) {
    ItemRecorder rec(name, opt.witness_cap);
    for (Index i = 0; i < nV; ++i)
      for (Index j = 0; j < nV; ++j) {
        const Rational sg(right_sign * koszul(bm.space, i, bm.space, j));
        const VectorQ tu = T * ev(i), tv = T * ev(j);
        VectorQ inner = left.of(tu) * ev(j);
        if (twisted)
          inner += sg * (right.of(VectorQ(T * (P * ev(j)))) * (Q * ev(i)));
        else
          inner += sg * (right.of(tv) * ev(i));
        if (modprod) inner += op.weight * apply_bilinear(*modprod, ev(i), ev(j));
        rec.record({i, j}, VectorQ(apply_bilinear(prod, tu, tv) - T * inner));
      }
    rep.items.push_back(rec.take());
  };

  const BilinearOp* modprod = bm.products.empty() ? nullptr : &bm.products.front();
  switch (s.variety) {
  case Variety::Associative:
    identity_item("o.operator.associative", s.product(), bm.left(), bm.right(), modprod, +1);
    break;
  case Variety::Lie:
    identity_item("o.operator.lie", s.product(), bm.rho(), bm.rho(), modprod, -1);
    break;
  case Variety::PreLie:
    identity_item("o.operator.prelie", s.product(), bm.left(), bm.right(), modprod, +1);
    break;
  case Variety::LDendriform: {
    const BilinearOp* gtV = bm.products.empty() ? nullptr : &bm.products.at(0);
    const BilinearOp* ltV = bm.products.empty() ? nullptr : &bm.products.at(1);
    identity_item("o.operator.ldend.succ", s.succ(), bm.l_succ(), bm.r_succ(), gtV, +1);
    identity_item("o.operator.ldend.prec", s.prec(), bm.l_prec(), bm.r_prec(), ltV, +1);
    break;
  }
  case Variety::LieAdmissible:
    throw VarietyMismatch("check_o_operator: no O-operator identity for the lie-admissible tag");
  }
  return rep;
}

Report check_extended_o_operator(const Structure& s, const Bimodule& bm, const OperatorSpec& op,
                                 const CheckOptions& opt) {
  if (op.kind != OperatorKind::ExtendedOOperator)
    throw VarietyMismatch("check_extended_o_operator: operator '" + op.name + "' is tagged " +
                          operator_kind_name(op.kind));
  if (s.variety != Variety::Associative || bm.variety() != Variety::Associative)
    throw VarietyMismatch("check_extended_o_operator: defined for the associative variety");
  if (!op.modification)
    throw InvariantViolation("check_extended_o_operator: modification map T' is missing");
  const MatrixQ& T = op.map.mat;
  const MatrixQ& Tp = op.modification->mat;
  if (T.rows() != s.space.dim() || T.cols() != bm.space.dim() || Tp.rows() != T.rows() ||
      Tp.cols() != T.cols())
    throw DimensionMismatch("check_extended_o_operator: maps must go from the module to the algebra");

  Report rep;
  rep.subject = "extended super O-operator '" + op.name + "' of weight " + to_string(op.weight);
  commutation_items(rep, op.name, s.alpha, "alpha", T, bm.alphaV.mat, opt);
  commutation_items(rep, op.name, s.beta, "beta", T, bm.betaV.mat, opt);
  commutation_items(rep, op.name + ".modification", s.alpha, "alpha", Tp, bm.alphaV.mat, opt);
  commutation_items(rep, op.name + ".modification", s.beta, "beta", Tp, bm.betaV.mat, opt);

  const Index nV = bm.space.dim();
  auto ev = [&](Index i) { return basis_vector(bm.space, i); };
  const auto& l = bm.left();
  const auto& r = bm.right();
  const auto& mu = s.product();

  ItemRecorder balance("extended.balance", opt.witness_cap);
  ItemRecorder identity("extended.identity", opt.witness_cap);
  for (Index i = 0; i < nV; ++i)
    for (Index j = 0; j < nV; ++j) {
      balance.record({i, j}, VectorQ(op.weight * (l.of(VectorQ(Tp * ev(i))) * ev(j)) -
                                     op.weight * (r.of(VectorQ(Tp * ev(j))) * ev(i))));
      const Rational sg(koszul(bm.space, i, bm.space, j));
      VectorQ inner = l.of(VectorQ(T * ev(i))) * ev(j) + sg * (r.of(VectorQ(T * ev(j))) * ev(i));
      identity.record({i, j},
                      VectorQ(apply_bilinear(mu, T * ev(i), T * ev(j)) - T * inner -
                              op.weight * apply_bilinear(mu, Tp * ev(i), Tp * ev(j))));
    }
  rep.items.push_back(balance.take());
  rep.items.push_back(identity.take());
  return rep;
}

Report check_module_rota_baxter(const Structure& s, const Bimodule& bm, const OperatorSpec& R,
                                const OperatorSpec& RV, const CheckOptions& opt) {
  if (!R.weight.is_zero() || !RV.weight.is_zero())
    throw WeightNotZero("check_module_rota_baxter: defined for weight zero only");
  if (bm.variety() != s.variety)
    throw VarietyMismatch("check_module_rota_baxter: bimodule variety does not match the structure");
  if (s.variety == Variety::PreLie || s.variety == Variety::LieAdmissible)
    throw VarietyMismatch("check_module_rota_baxter: defined for the associative, Lie and "
                          "L-dendriform varieties");
  const MatrixQ& rv = RV.map.mat;
  if (rv.rows() != bm.space.dim() || rv.cols() != bm.space.dim())
    throw DimensionMismatch("check_module_rota_baxter: R_V is not an endomorphism of V");

  Report rep;
  rep.subject = "module Rota-Baxter operator '" + RV.name + "' relative to '" + R.name + "'";
  {
    Report rcheck = check_rota_baxter(s, R, opt);
    if (!rcheck.pass()) {
      rcheck.notes.push_back("precondition failed: R is not a weight-0 Rota-Baxter operator");
      return rcheck;
    }
  }
  commutation_items(rep, RV.name, bm.alphaV, "alphaV", rv, bm.alphaV.mat, opt);
  commutation_items(rep, RV.name, bm.betaV, "betaV", rv, bm.betaV.mat, opt);

  const Index nA = s.space.dim();
  const Index nV = bm.space.dim();
  const MatrixQ& Rm = R.map.mat;
  auto ev = [&](Index i) { return basis_vector(bm.space, i); };

  auto pair_items = [&](const std::string& stem, const Action& left, const Action& right) {
    ItemRecorder lrec("module.rb." + stem + ".left", opt.witness_cap);
    ItemRecorder rrec("module.rb." + stem + ".right", opt.witness_cap);
    for (Index a = 0; a < nA; ++a) {
      const VectorQ ra = Rm * basis_vector(s.space, a);
      for (Index i = 0; i < nV; ++i) {
        lrec.record({a, i}, VectorQ(left.of(ra) * (rv * ev(i)) -
                                    rv * (left.of(ra) * ev(i) +
                                          left.of_basis(a) * (rv * ev(i)))));
        rrec.record({a, i}, VectorQ(right.of(ra) * (rv * ev(i)) -
                                    rv * (right.of_basis(a) * (rv * ev(i)) +
                                          right.of(ra) * ev(i))));
      }
    }
    rep.items.push_back(lrec.take());
    rep.items.push_back(rrec.take());
  };

  switch (s.variety) {
  case Variety::Associative:
    pair_items("action", bm.left(), bm.right());
    break;
  case Variety::Lie: {
    ItemRecorder one("module.rb.bracket", opt.witness_cap);
    ItemRecorder two("module.rb.bracket.flipped", opt.witness_cap);
    const auto& rho = bm.rho();
    for (Index a = 0; a < nA; ++a) {
      const VectorQ ra = Rm * basis_vector(s.space, a);
      for (Index i = 0; i < nV; ++i) {
        VectorQ first = rho.of(ra) * (rv * ev(i)) -
                        rv * (rho.of(ra) * ev(i) + rho.of_basis(a) * (rv * ev(i)));
        one.record({a, i}, first);
        // [v, x] is read as the super flip -(-1)^{|v||x|}[x, v]
        const Rational sg(koszul(s.space, a, bm.space, i));
        two.record({a, i}, VectorQ(-sg * first));
      }
    }
    rep.items.push_back(one.take());
    rep.items.push_back(two.take());
    rep.notes.push_back("flipped action [v,x] interpreted as -(-1)^{|v||x|} rho(x)(v)");
    break;
  }
  case Variety::LDendriform:
    pair_items("succ", bm.l_succ(), bm.r_succ());
    pair_items("prec", bm.l_prec(), bm.r_prec());
    break;
  default:
    break;
  }
  return rep;
}

} // namespace bihom
