#pragma once

#include <string>

#include "bihom/superspace.hpp"

namespace bihom {

enum class Variety { Associative, Lie, PreLie, LDendriform, LieAdmissible };

std::string variety_name(Variety v);
Variety variety_from_name(std::string_view name); // throws UnknownName

// A finite-dimensional BiHom superalgebra: a graded space, one product
// (or the pair ▷, ◁ for the L-dendriform case) and two even structure
// maps alpha, beta.
struct Structure {
  SuperSpace space;
  std::vector<BilinearOp> products; // 1 product; 2 for LDendriform
  EvenMap alpha;
  EvenMap beta;
  Variety variety = Variety::Associative;

  const BilinearOp& product() const { return products.at(0); }
  const BilinearOp& succ() const { return products.at(0); } // x ▷ y
  const BilinearOp& prec() const { return products.at(1); } // x ◁ y

  void validate() const; // dimensions, evenness; throws on violation
};

Structure make_structure(Variety variety, SuperSpace space, std::vector<BilinearOp> products,
                         EvenMap alpha, EvenMap beta);

} // namespace bihom
