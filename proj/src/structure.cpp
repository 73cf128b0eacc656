#include "bihom/structure.hpp"

#include "bihom/errors.hpp"

namespace bihom {

std::string variety_name(Variety v) {
  switch (v) {
  case Variety::Associative: return "associative";
  case Variety::Lie: return "lie";
  case Variety::PreLie: return "prelie";
  case Variety::LDendriform: return "ldendriform";
  case Variety::LieAdmissible: return "lieadmissible";
  }
  return "?";
}

Variety variety_from_name(std::string_view name) {
  if (name == "associative") return Variety::Associative;
  if (name == "lie") return Variety::Lie;
  if (name == "prelie") return Variety::PreLie;
  if (name == "ldendriform") return Variety::LDendriform;
  if (name == "lieadmissible") return Variety::LieAdmissible;
  throw UnknownName("unknown variety '" + std::string(name) + "'");
}

void Structure::validate() const {
  const size_t expected = (variety == Variety::LDendriform) ? 2 : 1;
  if (products.size() != expected)
    throw InvariantViolation("structure tagged " + variety_name(variety) + " must carry " +
                             std::to_string(expected) + " product(s)");
  for (const auto& p : products) {
    if (!(p.space == space)) throw DimensionMismatch("product over a different space");
    if (p.c.size() != static_cast<size_t>(space.dim()))
      throw DimensionMismatch("product tensor has wrong first dimension");
    for (const auto& m : p.c)
      if (m.rows() != space.dim() || m.cols() != space.dim())
        throw DimensionMismatch("product tensor slice has wrong shape");
    if (!is_even_bilinear(p))
      throw InvariantViolation("product '" + p.name + "' violates parity");
  }
  for (const EvenMap* f : {&alpha, &beta}) {
    if (!(f->domain == space) || !(f->codomain == space))
      throw DimensionMismatch("structure map is not an endomorphism of the space");
    if (!is_even_matrix(f->domain, f->codomain, f->mat))
      throw InvariantViolation("structure map is not even");
  }
}

Structure make_structure(Variety variety, SuperSpace space, std::vector<BilinearOp> products,
                         EvenMap alpha, EvenMap beta) {
  Structure s;
  s.variety = variety;
  s.space = std::move(space);
  s.products = std::move(products);
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  s.validate();
  return s;
}

} // namespace bihom
