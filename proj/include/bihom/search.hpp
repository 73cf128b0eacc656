#pragma once

#include "bihom/operators.hpp"

namespace bihom {

enum class SearchTarget { RotaBaxter, OOperator };
enum class SearchShape { Diagonal, UpperTriangular, Full };

SearchShape search_shape_from_name(std::string_view name);
std::string search_shape_name(SearchShape shape);

// Bounded brute-force search: every free (parity-respecting) entry of the
// candidate matrix runs over the same finite grid of rationals.
struct SearchSpec {
  SearchTarget target = SearchTarget::RotaBaxter;
  SearchShape shape = SearchShape::Diagonal;
  std::vector<Rational> grid;
  Rational weight = Rational(0);
  unsigned long long cap = 1000000;
};

// Free entry positions (row, col) of a codomain x domain matrix: only
// parity-equal slots, restricted by the shape.
std::vector<std::pair<Index, Index>> search_positions(const SuperSpace& domain,
                                                      const SuperSpace& codomain, SearchShape shape);

struct SearchResult {
  std::vector<OperatorSpec> found; // in grid-lexicographic order
  unsigned long long space_size = 0;
};

// Enumerates the grid exhaustively and keeps exactly the candidates that
// satisfy the target identity. The verification loop here short-circuits at
// the first violated tuple; the Report-producing checkers stay the oracle.
SearchResult run_search(const Structure& s, const Bimodule* bm, const SearchSpec& spec);

} // namespace bihom
