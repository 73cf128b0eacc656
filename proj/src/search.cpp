#include "bihom/search.hpp"

#include "bihom/errors.hpp"

namespace bihom {

SearchShape search_shape_from_name(std::string_view name) {
  if (name == "diagonal") return SearchShape::Diagonal;
  if (name == "triangular") return SearchShape::UpperTriangular;
  if (name == "full") return SearchShape::Full;
  throw UnknownName("unknown search shape '" + std::string(name) + "'");
}

std::string search_shape_name(SearchShape shape) {
  switch (shape) {
  case SearchShape::Diagonal: return "diagonal";
  case SearchShape::UpperTriangular: return "triangular";
  case SearchShape::Full: return "full";
  }
  return "?";
}

std::vector<std::pair<Index, Index>> search_positions(const SuperSpace& domain,
                                                      const SuperSpace& codomain,
                                                      SearchShape shape) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < codomain.dim(); ++i)
    for (Index j = 0; j < domain.dim(); ++j) {
      if (codomain.parity_of(i) != domain.parity_of(j)) continue;
      if (shape == SearchShape::Diagonal && i != j) continue;
      if (shape == SearchShape::UpperTriangular && i > j) continue;
      out.emplace_back(i, j);
    }
  return out;
}

namespace {

int koszul(const SuperSpace& sp, Index i, Index j) {
  return (sp.parity_of(i) * sp.parity_of(j)) == 1 ? -1 : 1;
}

bool commutes(const MatrixQ& a, const MatrixQ& t, const MatrixQ& tv) {
  return is_zero(MatrixQ(a * t - t * tv));
}

bool rota_baxter_passes(const Structure& s, const MatrixQ& r, const Rational& w) {
  if (!commutes(s.alpha.mat, r, s.alpha.mat) || !commutes(s.beta.mat, r, s.beta.mat))
    return false;
  const Index n = s.space.dim();
  for (const auto& p : s.products)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const VectorQ ei = basis_vector(s.space, i), ej = basis_vector(s.space, j);
        VectorQ inner =
            apply_bilinear(p, r * ei, ej) + apply_bilinear(p, ei, r * ej) + w * p.mul_basis(i, j);
        if (!is_zero(VectorQ(apply_bilinear(p, r * ei, r * ej) - r * inner))) return false;
      }
  return true;
}

struct OOpContext {
  bool twisted = false;
  MatrixQ p, q; // alphaV^{-1} betaV, alphaV betaV^{-1}
};

bool o_operator_passes(const Structure& s, const Bimodule& bm, const MatrixQ& t, const Rational& w,
                       const OOpContext& ctx) {
  if (!commutes(s.alpha.mat, t, bm.alphaV.mat) || !commutes(s.beta.mat, t, bm.betaV.mat))
    return false;
  const Index nV = bm.space.dim();
  auto ev = [&](Index i) { return basis_vector(bm.space, i); };
  auto identity_holds = [&](const BilinearOp& prod, const Action& left, const Action& right,
                            const BilinearOp* modprod, int right_sign) {
    for (Index i = 0; i < nV; ++i)
      for (Index j = 0; j < nV; ++j) {
        const Rational sg(right_sign * koszul(bm.space, i, j));
        const VectorQ tu = t * ev(i), tv = t * ev(j);
        VectorQ inner = left.of(tu) * ev(j);
        if (ctx.twisted)
          inner += sg * (right.of(VectorQ(t * (ctx.p * ev(j)))) * (ctx.q * ev(i)));
        else
          inner += sg * (right.of(tv) * ev(i));
        if (modprod) inner += w * apply_bilinear(*modprod, ev(i), ev(j));
        if (!is_zero(VectorQ(apply_bilinear(prod, tu, tv) - t * inner))) return false;
      }
    return true;
  };
  const BilinearOp* modprod = bm.products.empty() ? nullptr : &bm.products.front();
  switch (s.variety) {
  case Variety::Associative:
    return identity_holds(s.product(), bm.left(), bm.right(), modprod, +1);
  case Variety::Lie:
    return identity_holds(s.product(), bm.rho(), bm.rho(), modprod, -1);
  case Variety::PreLie:
    return identity_holds(s.product(), bm.left(), bm.right(), modprod, +1);
  case Variety::LDendriform:
    return identity_holds(s.succ(), bm.l_succ(), bm.r_succ(),
                          bm.products.empty() ? nullptr : &bm.products.at(0), +1) &&
           identity_holds(s.prec(), bm.l_prec(), bm.r_prec(),
                          bm.products.empty() ? nullptr : &bm.products.at(1), +1);
  default:
    return false;
  }
}

} // namespace

SearchResult run_search(const Structure& s, const Bimodule* bm, const SearchSpec& spec) {
  if (spec.grid.empty()) throw InvariantViolation("run_search: empty grid");
  const bool o_op = spec.target == SearchTarget::OOperator;
  if (o_op && bm == nullptr)
    throw MissingModuleProduct("run_search: O-operator search needs a bimodule");
  if (o_op && !spec.weight.is_zero() && bm->products.empty())
    throw MissingModuleProduct("run_search: nonzero weight needs a module product");

  const SuperSpace& domain = o_op ? bm->space : s.space;
  const SuperSpace& codomain = s.space;
  const auto positions = search_positions(domain, codomain, spec.shape);

  SearchResult result;
  result.space_size = 1;
  for (size_t k = 0; k < positions.size(); ++k) {
    if (result.space_size > spec.cap / spec.grid.size() + 1)
      throw SearchSpaceTooLarge("run_search: " + std::to_string(spec.grid.size()) + "^" +
                                std::to_string(positions.size()) + " exceeds the cap of " +
                                std::to_string(spec.cap));
    result.space_size *= spec.grid.size();
  }
  if (result.space_size > spec.cap)
    throw SearchSpaceTooLarge("run_search: search space exceeds the cap of " +
                              std::to_string(spec.cap));

  OOpContext ctx;
  if (o_op && (s.variety == Variety::Lie || s.variety == Variety::PreLie)) {
    ctx.twisted = true;
    try {
      ctx.p = invert(bm->alphaV.mat) * bm->betaV.mat;
      ctx.q = bm->alphaV.mat * invert(bm->betaV.mat);
    } catch (const SingularMatrix&) {
      throw InvertibilityRequired("run_search: alphaV, betaV must be invertible for the " +
                                  variety_name(s.variety) + " identity");
    }
  }

  // odometer over grid indices, first position slowest
  std::vector<size_t> digits(positions.size(), 0);
  MatrixQ cand = MatrixQ::Zero(codomain.dim(), domain.dim());
  for (unsigned long long step = 0; step < result.space_size; ++step) {
    for (size_t k = 0; k < positions.size(); ++k)
      cand(positions[k].first, positions[k].second) = spec.grid[digits[k]];
    const bool ok = o_op ? o_operator_passes(s, *bm, cand, spec.weight, ctx)
                         : rota_baxter_passes(s, cand, spec.weight);
    if (ok) {
      OperatorSpec found;
      found.kind = o_op ? OperatorKind::OOperator : OperatorKind::RotaBaxter;
      found.name = (o_op ? "T" : "R") + std::to_string(result.found.size() + 1);
      found.map = EvenMap{domain, codomain, cand};
      found.weight = spec.weight;
      result.found.push_back(std::move(found));
    }
    for (size_t k = positions.size(); k-- > 0;) {
      if (++digits[k] < spec.grid.size()) break;
      digits[k] = 0;
    }
    if (positions.empty()) break;
  }
  return result;
}

} // namespace bihom
