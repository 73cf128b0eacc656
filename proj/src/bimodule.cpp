#include "bihom/bimodule.hpp"

#include "bihom/errors.hpp"

namespace bihom {

MatrixQ Action::of(const VectorQ& x) const {
  MatrixQ out = MatrixQ::Zero(m.at(0).rows(), m.at(0).cols());
  for (Index a = 0; a < x.size(); ++a) {
    if (x(a).is_zero()) continue;
    out += x(a) * m[static_cast<size_t>(a)];
  }
  return out;
}

bool is_even_action(const SuperSpace& algebra, const SuperSpace& module_space, const Action& act) {
  if (act.m.size() != static_cast<size_t>(algebra.dim())) return false;
  for (Index a = 0; a < algebra.dim(); ++a) {
    const MatrixQ& ma = act.of_basis(a);
    if (ma.rows() != module_space.dim() || ma.cols() != module_space.dim()) return false;
    for (Index j = 0; j < ma.cols(); ++j)
      for (Index k = 0; k < ma.rows(); ++k)
        if (!ma(k, j).is_zero() &&
            module_space.parity_of(k) !=
                ((algebra.parity_of(a) + module_space.parity_of(j)) % 2))
          return false;
  }
  return true;
}

void Bimodule::validate() const {
  base.validate();
  const size_t expected = (variety() == Variety::LDendriform) ? 4
                          : (variety() == Variety::Lie)       ? 1
                                                              : 2;
  if (actions.size() != expected)
    throw InvariantViolation("bimodule of a " + variety_name(variety()) + " structure must carry " +
                             std::to_string(expected) + " action tensor(s)");
  for (const auto& act : actions)
    if (!is_even_action(base.space, space, act))
      throw InvariantViolation("action '" + act.name + "' violates parity or shape");
  for (const EvenMap* f : {&alphaV, &betaV}) {
    if (!(f->domain == space) || !(f->codomain == space))
      throw DimensionMismatch("module structure map is not an endomorphism of V");
    if (!is_even_matrix(f->domain, f->codomain, f->mat))
      throw InvariantViolation("module structure map is not even");
  }
  if (variety() == Variety::LDendriform && !products.empty() && products.size() != 2)
    throw InvariantViolation("L-dendriform module product must be the pair (succ, prec)");
  for (const auto& p : products) {
    if (!(p.space == space)) throw DimensionMismatch("module product over a different space");
    if (!is_even_bilinear(p)) throw InvariantViolation("module product violates parity");
  }
}

namespace {

Action transposed_action(const std::string& name, const BilinearOp& p) {
  Action act;
  act.name = name;
  const Index n = p.space.dim();
  act.m.assign(static_cast<size_t>(n), MatrixQ::Zero(n, n));
  for (Index a = 0; a < n; ++a)
    for (Index j = 0; j < n; ++j) act.m[static_cast<size_t>(a)].col(j) = p.mul_basis(j, a);
  return act;
}

Action left_action(const std::string& name, const BilinearOp& p) {
  Action act;
  act.name = name;
  act.m = p.c;
  return act;
}

int koszul(const SuperSpace& a, Index i, const SuperSpace& b, Index j) {
  return (a.parity_of(i) * b.parity_of(j)) == 1 ? -1 : 1;
}

} // namespace

Bimodule regular_bimodule(const Structure& s) {
  Bimodule bm;
  bm.base = s;
  bm.space = s.space;
  bm.alphaV = s.alpha;
  bm.betaV = s.beta;
  switch (s.variety) {
  case Variety::Lie:
    bm.actions = {left_action("rho", s.product())};
    break;
  case Variety::LDendriform:
    bm.actions = {left_action("l_succ", s.succ()), transposed_action("r_succ", s.succ()),
                  left_action("l_prec", s.prec()), transposed_action("r_prec", s.prec())};
    break;
  default:
    bm.actions = {left_action("l", s.product()), transposed_action("r", s.product())};
    break;
  }
  bm.products = s.products;
  bm.validate();
  return bm;
}

Bimodule adjoint_bimodule(const Structure& s) {
  if (s.variety != Variety::Lie)
    throw VarietyMismatch("adjoint_bimodule: structure is not tagged lie");
  return regular_bimodule(s);
}

Report check_bimodule(const Bimodule& bm, const CheckOptions& opt) {
  bm.validate();
  Report rep;
  rep.subject = "bimodule of a " + variety_name(bm.variety()) + " structure";
  const Structure& s = bm.base;
  const Index nA = s.space.dim();
  const Index nV = bm.space.dim();
  const MatrixQ& A = s.alpha.mat;
  const MatrixQ& B = s.beta.mat;
  const MatrixQ& aV = bm.alphaV.mat;
  const MatrixQ& bV = bm.betaV.mat;

  {
    ItemRecorder rec("alphaV.betaV.commute", opt.witness_cap);
    const MatrixQ d = aV * bV - bV * aV;
    for (Index j = 0; j < nV; ++j) rec.record({j}, d.col(j));
    rep.items.push_back(rec.take());
  }

  auto per_pair = [&](const std::string& name, auto&& residual) {
    ItemRecorder rec(name, opt.witness_cap);
    for (Index a = 0; a < nA; ++a) {
      MatrixQ diff = residual(a);
      for (Index j = 0; j < nV; ++j) rec.record({a, j}, diff.col(j));
    }
    rep.items.push_back(rec.take());
  };
  auto per_triple = [&](const std::string& name, auto&& residual) {
    ItemRecorder rec(name, opt.witness_cap);
    for (Index a = 0; a < nA; ++a)
      for (Index b = 0; b < nA; ++b) {
        MatrixQ diff = residual(a, b);
        for (Index j = 0; j < nV; ++j) rec.record({a, b, j}, diff.col(j));
      }
    rep.items.push_back(rec.take());
  };

  switch (bm.variety()) {
  case Variety::Associative: {
    const auto& l = bm.left();
    const auto& r = bm.right();
    const auto& mu = s.product();
    per_triple("assoc.module.l.l", [&](Index a, Index b) {
      return MatrixQ(l.of(A.col(a)) * l.of_basis(b) - l.of(apply_bilinear(mu, basis_vector(s.space, a), basis_vector(s.space, b))) * bV);
    });
    per_triple("assoc.module.l.r", [&](Index a, Index b) {
      return MatrixQ(l.of(A.col(a)) * r.of_basis(b) - r.of(B.col(b)) * l.of_basis(a));
    });
    per_triple("assoc.module.r.r", [&](Index a, Index b) {
      return MatrixQ(r.of(apply_bilinear(mu, basis_vector(s.space, a), basis_vector(s.space, b))) * aV -
                     r.of(B.col(b)) * r.of_basis(a));
    });
    per_pair("assoc.module.l.alpha", [&](Index a) { return MatrixQ(l.of(A.col(a)) * aV - aV * l.of_basis(a)); });
    per_pair("assoc.module.r.alpha", [&](Index a) { return MatrixQ(r.of(A.col(a)) * aV - aV * r.of_basis(a)); });
    per_pair("assoc.module.l.beta", [&](Index a) { return MatrixQ(l.of(B.col(a)) * bV - bV * l.of_basis(a)); });
    per_pair("assoc.module.r.beta", [&](Index a) { return MatrixQ(r.of(B.col(a)) * bV - bV * r.of_basis(a)); });
    break;
  }
  case Variety::Lie: {
    const auto& rho = bm.rho();
    const auto& br = s.product();
    per_pair("lie.rep.alpha", [&](Index a) { return MatrixQ(rho.of(A.col(a)) * aV - aV * rho.of_basis(a)); });
    per_pair("lie.rep.beta", [&](Index a) { return MatrixQ(rho.of(B.col(a)) * bV - bV * rho.of_basis(a)); });
    per_triple("lie.rep.bracket", [&](Index a, Index b) {
      const Rational sg(koszul(s.space, a, s.space, b));
      return MatrixQ(rho.of(apply_bilinear(br, B.col(a), basis_vector(s.space, b))) * bV -
                     rho.of(MatrixQ(A * B).col(a)) * rho.of_basis(b) +
                     sg * (rho.of(B.col(b)) * rho.of(A.col(a))));
    });
    break;
  }
  case Variety::PreLie: {
    const auto& l = bm.left();
    const auto& r = bm.right();
    const auto& p = s.product();
    const MatrixQ AB = A * B;
    per_pair("prelie.module.l.alpha", [&](Index a) { return MatrixQ(l.of(A.col(a)) * aV - aV * l.of_basis(a)); });
    per_pair("prelie.module.l.beta", [&](Index a) { return MatrixQ(l.of(B.col(a)) * bV - bV * l.of_basis(a)); });
    per_pair("prelie.module.r.alpha", [&](Index a) { return MatrixQ(r.of(A.col(a)) * aV - aV * r.of_basis(a)); });
    per_pair("prelie.module.r.beta", [&](Index a) { return MatrixQ(r.of(B.col(a)) * bV - bV * r.of_basis(a)); });
    per_triple("prelie.module.left.symmetry", [&](Index a, Index b) {
      const Rational sg(koszul(s.space, a, s.space, b));
      MatrixQ lhs = l.of(apply_bilinear(p, B.col(a), A.col(b))) * bV - l.of(AB.col(a)) * l.of(A.col(b));
      MatrixQ rhs = l.of(apply_bilinear(p, B.col(b), A.col(a))) * bV - l.of(AB.col(b)) * l.of(A.col(a));
      return MatrixQ(lhs - sg * rhs);
    });
    {
      // right side carries the sign (-1)^{|y||u|}: evaluate per module column
      ItemRecorder rec("prelie.module.right.mixed", opt.witness_cap);
      for (Index a = 0; a < nA; ++a)
        for (Index b = 0; b < nA; ++b) {
          MatrixQ lhs = r.of(B.col(a)) * r.of(A.col(b)) * bV -
                        r.of(apply_bilinear(p, A.col(b), basis_vector(s.space, a))) * aV * bV;
          MatrixQ rhs = r.of(B.col(a)) * l.of(B.col(b)) * aV - l.of(AB.col(b)) * r.of_basis(a) * aV;
          for (Index j = 0; j < nV; ++j) {
            const Rational sg(koszul(s.space, b, bm.space, j));
            rec.record({a, b, j}, VectorQ(lhs.col(j) - sg * rhs.col(j)));
          }
        }
      rep.items.push_back(rec.take());
      rep.notes.push_back("right-action condition read as r(beta(x)) r(alpha(y)) betaV - "
                          "r(alpha(y) o x) alphaV betaV = (-1)^{|y||u|} (r(beta(x)) l(beta(y)) alphaV "
                          "- l(alpha beta(y)) r(x) alphaV)");
    }
    break;
  }
  case Variety::LDendriform: {
    const auto& lg = bm.l_succ();
    const auto& rg = bm.r_succ();
    const auto& ll = bm.l_prec();
    const auto& rl = bm.r_prec();
    const auto& gt = s.succ();
    const auto& lt = s.prec();
    const MatrixQ AB = A * B;
    auto bullet = [&](const VectorQ& x, const VectorQ& y) {
      return VectorQ(apply_bilinear(gt, x, y) + apply_bilinear(lt, x, y));
    };
    per_triple("ldend.module.a", [&](Index a, Index b) {
      const Rational sg(koszul(s.space, a, s.space, b));
      // [beta(x), alpha(y)] = beta(x) . alpha(y) - (-1)^{|x||y|} beta(y) . alpha(x)
      VectorQ bracket = bullet(B.col(a), A.col(b)) - sg * bullet(B.col(b), A.col(a));
      return MatrixQ(lg.of(bracket) * bV - lg.of(AB.col(a)) * lg.of(A.col(b)) +
                     sg * (lg.of(AB.col(b)) * lg.of(A.col(a))));
    });
    per_triple("ldend.module.b", [&](Index a, Index b) {
      const Rational sg(koszul(s.space, a, s.space, b));
      // beta(x) o alpha(y) = beta(x) > alpha(y) - (-1)^{|x||y|} beta(y) < alpha(x)
      VectorQ vert = apply_bilinear(gt, B.col(a), A.col(b)) - sg * apply_bilinear(lt, B.col(b), A.col(a));
      return MatrixQ(ll.of(vert) * bV - lg.of(AB.col(a)) * ll.of(A.col(b)) +
                     sg * (ll.of(AB.col(b)) * ll.of(A.col(a)) + ll.of(AB.col(b)) * lg.of(A.col(a))));
    });
    // In the three right-action conditions the sign factor is
    // (-1)^{|x||u|} with u the module element: per-column evaluation.
    auto per_triple_u = [&](const std::string& name, auto&& lhs_of, auto&& rhs_of) {
      ItemRecorder rec(name, opt.witness_cap);
      for (Index a = 0; a < nA; ++a)
        for (Index b = 0; b < nA; ++b) {
          MatrixQ lhs = lhs_of(a, b);
          MatrixQ rhs = rhs_of(a, b);
          for (Index j = 0; j < nV; ++j) {
            const Rational sg(koszul(s.space, a, bm.space, j));
            rec.record({a, b, j}, VectorQ(lhs.col(j) - sg * rhs.col(j)));
          }
        }
      rep.items.push_back(rec.take());
    };
    per_triple_u(
        "ldend.module.c",
        [&](Index a, Index b) {
          return MatrixQ(rg.of(apply_bilinear(gt, A.col(a), basis_vector(s.space, b))) * aV * bV -
                         rg.of(B.col(b)) * rg.of(A.col(a)) * bV - rg.of(B.col(b)) * rl.of(A.col(a)) * bV);
        },
        [&](Index a, Index b) {
          return MatrixQ(lg.of(AB.col(a)) * rg.of_basis(b) * aV - rg.of(B.col(b)) * lg.of(B.col(a)) * aV -
                         rg.of(B.col(b)) * ll.of(B.col(a)) * aV);
        });
    per_triple_u(
        "ldend.module.d",
        [&](Index a, Index b) {
          return MatrixQ(rg.of(apply_bilinear(lt, A.col(a), basis_vector(s.space, b))) * aV * bV -
                         rl.of(B.col(b)) * rg.of(A.col(a)) * bV);
        },
        [&](Index a, Index b) {
          return MatrixQ(ll.of(AB.col(a)) * rg.of_basis(b) * aV + ll.of(AB.col(a)) * rl.of_basis(b) * aV -
                         rl.of(B.col(b)) * ll.of(B.col(a)) * aV);
        });
    per_triple_u(
        "ldend.module.e",
        [&](Index a, Index b) {
          VectorQ prod = bullet(A.col(a), basis_vector(s.space, b));
          return MatrixQ(rl.of(prod) * aV * bV - rl.of(B.col(b)) * rl.of(A.col(a)) * bV);
        },
        [&](Index a, Index b) {
          return MatrixQ(lg.of(AB.col(a)) * rl.of_basis(b) * aV - rl.of(B.col(b)) * lg.of(B.col(a)) * aV);
        });
    rep.notes.push_back("right-action conditions carry the Koszul factor (-1)^{|x||u|} of the "
                        "module element, as required by the regular bimodule");
    break;
  }
  case Variety::LieAdmissible:
    throw VarietyMismatch("check_bimodule: no bimodule axioms for the lie-admissible tag");
  }
  return rep;
}

Report check_module_k_superalgebra(const Bimodule& bm, const CheckOptions& opt) {
  if (bm.products.empty())
    throw MissingModuleProduct("check_module_k_superalgebra: bimodule has no module product");
  {
    Report pre = check_bimodule(bm, opt);
    if (!pre.pass()) return pre; // K-conditions presuppose the bimodule axioms
  }
  Report rep;
  rep.subject = "bimodule K-superalgebra of a " + variety_name(bm.variety()) + " structure";
  const Structure& s = bm.base;
  const Index nA = s.space.dim();
  const Index nV = bm.space.dim();
  const MatrixQ& A = s.alpha.mat;
  const MatrixQ& B = s.beta.mat;
  const MatrixQ& aV = bm.alphaV.mat;
  const MatrixQ& bV = bm.betaV.mat;

  auto per_xuv = [&](const std::string& name, auto&& residual) {
    ItemRecorder rec(name, opt.witness_cap);
    for (Index a = 0; a < nA; ++a)
      for (Index i = 0; i < nV; ++i)
        for (Index j = 0; j < nV; ++j) rec.record({a, i, j}, residual(a, i, j));
    rep.items.push_back(rec.take());
  };
  auto ev = [&](Index i) { return basis_vector(bm.space, i); };

  switch (bm.variety()) {
  case Variety::Associative: {
    const auto& l = bm.left();
    const auto& r = bm.right();
    const auto& muV = bm.product();
    per_xuv("assoc.k.left", [&](Index a, Index i, Index j) {
      return VectorQ(l.of(A.col(a)) * apply_bilinear(muV, ev(i), ev(j)) -
                     apply_bilinear(muV, l.of_basis(a) * ev(i), bV * ev(j)));
    });
    per_xuv("assoc.k.right", [&](Index a, Index i, Index j) {
      return VectorQ(apply_bilinear(muV, aV * ev(i), r.of_basis(a) * ev(j)) -
                     r.of(B.col(a)) * apply_bilinear(muV, ev(i), ev(j)));
    });
    per_xuv("assoc.k.middle", [&](Index a, Index i, Index j) {
      return VectorQ(apply_bilinear(muV, aV * ev(i), l.of_basis(a) * ev(j)) -
                     apply_bilinear(muV, r.of_basis(a) * ev(i), bV * ev(j)));
    });
    break;
  }
  case Variety::Lie: {
    const auto& rho = bm.rho();
    const auto& brV = bm.product();
    const MatrixQ B2 = B * B;
    const MatrixQ bV2 = bV * bV;
    per_xuv("lie.k.bracket", [&](Index a, Index i, Index j) {
      const Rational sg(koszul(s.space, a, bm.space, i));
      return VectorQ(rho.of(B2.col(a)) * apply_bilinear(brV, bV * ev(i), aV * ev(j)) -
                     apply_bilinear(brV, rho.of(B.col(a)) * aV * ev(i), bV2 * ev(j)) -
                     sg * apply_bilinear(brV, bV2 * ev(i), rho.of(B.col(a)) * aV * ev(j)));
    });
    break;
  }
  case Variety::PreLie: {
    const auto& l = bm.left();
    const auto& r = bm.right();
    const auto& cV = bm.product();
    const MatrixQ AB = A * B;
    const MatrixQ aVbV = aV * bV;
    per_xuv("prelie.k.left", [&](Index a, Index i, Index j) {
      const Rational sg(koszul(s.space, a, bm.space, i));
      return VectorQ(apply_bilinear(cV, l.of(B.col(a)) * aV * ev(i), bV * ev(j)) -
                     l.of(AB.col(a)) * apply_bilinear(cV, aV * ev(i), ev(j)) -
                     sg * (apply_bilinear(cV, r.of(A.col(a)) * bV * ev(i), bV * ev(j)) -
                           apply_bilinear(cV, aVbV * ev(i), l.of(A.col(a)) * ev(j))));
    });
    per_xuv("prelie.k.right", [&](Index a, Index i, Index j) {
      const Rational sg(koszul(bm.space, i, bm.space, j));
      return VectorQ(r.of(B.col(a)) * apply_bilinear(cV, bV * ev(i), aV * ev(j)) -
                     apply_bilinear(cV, aVbV * ev(i), r.of_basis(a) * aV * ev(j)) -
                     sg * (r.of(B.col(a)) * apply_bilinear(cV, bV * ev(j), aV * ev(i)) -
                           apply_bilinear(cV, aVbV * ev(j), r.of_basis(a) * aV * ev(i))));
    });
    break;
  }
  case Variety::LDendriform: {
    const auto& lg = bm.l_succ();
    const auto& rg = bm.r_succ();
    const auto& ll = bm.l_prec();
    const auto& rl = bm.r_prec();
    const auto& gtV = bm.products.at(0);
    const auto& ltV = bm.products.at(1);
    const MatrixQ AB = A * B;
    const MatrixQ aVbV = aV * bV;
    auto bulletV = [&](const VectorQ& x, const VectorQ& y) {
      return VectorQ(apply_bilinear(gtV, x, y) + apply_bilinear(ltV, x, y));
    };
    per_xuv("ldend.k.a", [&](Index a, Index i, Index j) {
      const Rational sg(koszul(s.space, a, bm.space, i));
      return VectorQ(apply_bilinear(gtV, aVbV * ev(i), lg.of(A.col(a)) * ev(j)) -
                     sg * (lg.of(AB.col(a)) * apply_bilinear(gtV, aV * ev(i), ev(j))) -
                     apply_bilinear(gtV, rg.of(A.col(a)) * bV * ev(i), bV * ev(j)) -
                     apply_bilinear(gtV, rl.of(A.col(a)) * bV * ev(i), bV * ev(j)) +
                     sg * apply_bilinear(gtV, ll.of(B.col(a)) * aV * ev(i), bV * ev(j)) +
                     sg * apply_bilinear(gtV, lg.of(B.col(a)) * aV * ev(i), bV * ev(j)));
    });
    per_xuv("ldend.k.b", [&](Index a, Index i, Index j) {
      const Rational sg(koszul(bm.space, i, bm.space, j));
      return VectorQ(apply_bilinear(gtV, aVbV * ev(i), rg.of_basis(a) * aV * ev(j)) -
                     sg * apply_bilinear(gtV, aVbV * ev(j), rg.of_basis(a) * aV * ev(i)) -
                     rg.of(B.col(a)) * bulletV(bV * ev(i), aV * ev(j)) +
                     sg * (rg.of(B.col(a)) * bulletV(bV * ev(j), aV * ev(i))));
    });
    per_xuv("ldend.k.c", [&](Index a, Index i, Index j) {
      const Rational sg(koszul(s.space, a, bm.space, i));
      return VectorQ(lg.of(AB.col(a)) * apply_bilinear(ltV, aV * ev(i), ev(j)) -
                     apply_bilinear(ltV, lg.of(B.col(a)) * aV * ev(i), bV * ev(j)) -
                     sg * (apply_bilinear(ltV, aVbV * ev(i), lg.of(A.col(a)) * ev(j)) +
                           apply_bilinear(ltV, aVbV * ev(i), ll.of(A.col(a)) * ev(j)) -
                           apply_bilinear(ltV, rl.of(A.col(a)) * bV * ev(i), bV * ev(j))));
    });
    per_xuv("ldend.k.d", [&](Index a, Index i, Index j) {
      const Rational sg(koszul(s.space, a, bm.space, i));
      return VectorQ(apply_bilinear(gtV, aVbV * ev(i), ll.of(A.col(a)) * ev(j)) -
                     apply_bilinear(ltV, rg.of(A.col(a)) * bV * ev(i), bV * ev(j)) -
                     sg * (ll.of(AB.col(a)) * apply_bilinear(gtV, aV * ev(i), ev(j)) +
                           ll.of(AB.col(a)) * apply_bilinear(ltV, aV * ev(i), ev(j)) -
                           apply_bilinear(ltV, ll.of(B.col(a)) * aV * ev(i), bV * ev(j))));
    });
    rep.notes.push_back("module-product compatibility read off the semidirect-product reduction; "
                        "validated by the regular bimodule");
    break;
  }
  case Variety::LieAdmissible:
    throw VarietyMismatch("check_module_k_superalgebra: no axioms for the lie-admissible tag");
  }
  return rep;
}

} // namespace bihom
