// Acceptance suite: one line per criterion, exact (zero-tolerance) checks at
// desk scale. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>

#include "classical_oracle.hpp"
#include "generators.hpp"

#include "bihom/cohomology.hpp"

using namespace bihom;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, bool pass,
               const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << description;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

// 1. d^{n+1} d^n = 0 for >= 50 generated passing pre-Lie instances with
//    their regular bimodules, n <= 3.
void criterion_d_squared() {
  const auto started = std::chrono::steady_clock::now();
  std::vector<Structure> instances = gen::prelie_instances(2, 2);
  size_t checked = 0, twisted = 0;
  bool all = true;
  for (const Structure& s : instances) {
    if (!is_invertible(s.alpha.mat) || !is_invertible(s.beta.mat)) continue;
    const CochainComplex complex = build_complex(s, regular_bimodule(s), 4); // n <= 3 needs D_4

    if (!verify_d_squared(complex).pass()) {
      all = false;
      std::cout << "  d^2 != 0 on an instance of dim " << s.space.dim() << "\n";
    }
    ++checked;
    if (!maps_equal(s.alpha, identity_map(s.space)) && !maps_equal(s.alpha, s.beta)) ++twisted;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  criterion(1, "coboundary squares to zero on generated pre-Lie instances",
            all && checked >= 50 && twisted >= 5,
            std::to_string(checked) + " instances (" + std::to_string(twisted) +
                " with alpha != beta != id), " + std::to_string(elapsed) + " ms");
}

// 2. Every weight -1 Rota-Baxter operator found by the search gives a
//    certified pre-Lie product, and R re-verifies at weight -1 on it.
void criterion_rb_minus1() {
  size_t found_total = 0;
  bool all = true;
  for (const Structure& s : gen::associative_instances(2, 1)) {
    SearchSpec spec;
    spec.target = SearchTarget::RotaBaxter;
    spec.shape = s.space.dim() <= 2 ? SearchShape::Full : SearchShape::Diagonal;
    spec.grid = {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
    spec.weight = Rational(-1);
    for (const OperatorSpec& R : run_search(s, nullptr, spec).found) {
      ++found_total;
      try {
        OperatorSpec rb = R;
        rb.kind = OperatorKind::RotaBaxter;
        const Structure prelie = prelie_from_rb_assoc(s, rb, Rational(-1));
        if (!check_bihom_prelie(prelie).pass() || !check_rota_baxter(prelie, rb).pass())
          all = false;
      } catch (const Error& e) {
        all = false;
        std::cout << "  construction failed: " << e.what() << "\n";
      }
    }
  }
  criterion(2, "weight -1 Rota-Baxter operators transfer to certified pre-Lie products",
            all && found_total >= 20, std::to_string(found_total) + " operators");
}

// 3. O-operator constructions land in their target varieties.
void criterion_o_operator_constructions() {
  size_t built = 0;
  bool all = true;
  auto guard = [&](auto&& fn) {
    try {
      fn();
      ++built;
    } catch (const Error& e) {
      all = false;
      std::cout << "  construction failed: " << e.what() << "\n";
    }
  };
  for (const Structure& lie : gen::lie_instances(2, 2)) {
    const Bimodule bm = adjoint_bimodule(lie);
    SearchSpec spec;
    spec.target = SearchTarget::OOperator;
    spec.shape = SearchShape::Diagonal;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    for (const OperatorSpec& T : run_search(lie, &bm, spec).found)
      guard([&] { prelie_from_o_op_lie(lie, bm, T); });
  }
  for (const Structure& s : gen::associative_instances(2, 1)) {
    const Bimodule bm = regular_bimodule(s);
    SearchSpec spec;
    spec.target = SearchTarget::OOperator;
    spec.shape = SearchShape::Diagonal;
    spec.grid = {Rational(0), Rational(1), Rational(2)};
    for (const OperatorSpec& T : run_search(s, &bm, spec).found)
      guard([&] { ldend_from_o_op_assoc(s, bm, T); });
  }
  for (const Structure& s : gen::prelie_instances(2, 1)) {
    if (!is_invertible(s.alpha.mat) || !is_invertible(s.beta.mat)) continue;
    const Bimodule bm = regular_bimodule(s);
    SearchSpec spec;
    spec.target = SearchTarget::OOperator;
    spec.shape = SearchShape::Diagonal;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    for (const OperatorSpec& T : run_search(s, &bm, spec).found)
      guard([&] { ldend_from_o_op_prelie(s, bm, T); });
  }
  criterion(3, "O-operator constructions certify in their target varieties", all && built >= 50,
            std::to_string(built) + " constructions, zero failures required");
}

// 4. subadjacent(vertical) = bracket = subadjacent(horizontal), exactly.
void criterion_diagram_coherence() {
  bool all = true;
  size_t checked = 0;
  for (const Structure& s : gen::ldend_instances()) {
    const LdendDerived derived = ldend_derived(s);
    if (!subadjacent(derived.vertical).product().same_constants(derived.bracket.product()))
      all = false;
    if (!subadjacent(derived.horizontal).product().same_constants(derived.bracket.product()))
      all = false;
    ++checked;
  }
  criterion(4, "sub-adjacent brackets of vertical and horizontal equal the dendriform bracket",
            all && checked >= 8, std::to_string(checked) + " instances");
}

// 5. Transpose dualities and involution.
void criterion_transpose() {
  bool all = true;
  size_t checked = 0;
  for (const Structure& s : gen::ldend_instances()) {
    const LdendDerived derived = ldend_derived(s);
    const LdendDerived of_transpose = ldend_derived(derived.transpose);
    if (!of_transpose.vertical.product().same_constants(derived.horizontal.product())) all = false;
    if (!of_transpose.horizontal.product().same_constants(derived.vertical.product())) all = false;
    if (!of_transpose.transpose.succ().same_constants(s.succ())) all = false;
    if (!of_transpose.transpose.prec().same_constants(s.prec())) all = false;
    ++checked;
  }
  criterion(5, "transpose dualities hold and the transpose is an involution", all && checked >= 8,
            std::to_string(checked) + " instances");
}

// 6. Classical reduction against the independent left-symmetric oracle.
void criterion_classical_oracle() {
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<long> val(-3, 3);
  const SuperSpace sp = SuperSpace::make({"e1", "e2"}, {});
  bool all = true;
  for (int trial = 0; trial < 100; ++trial) {
    classical::Algebra a;
    a.dim = 2;
    a.c.assign(2, MatrixQ::Zero(2, 2));
    BilinearOp p = BilinearOp::zero("circ", sp);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        for (Index k = 0; k < 2; ++k) {
          const Rational v(val(rng));
          a.c[static_cast<size_t>(i)](k, j) = v;
          p.set_coeff(i, j, k, v);
        }
    const Structure s =
        make_structure(Variety::PreLie, sp, {p}, identity_map(sp), identity_map(sp));
    if (check_bihom_prelie(s).pass() != classical::left_symmetric(a)) all = false;
    const auto br = classical::commutator(a);
    const BilinearOp sub =
        commutator_bilinear(p, MatrixQ::Identity(2, 2), MatrixQ::Identity(2, 2), "bracket");
    for (Index i = 0; i < 2; ++i)
      if (!is_zero(MatrixQ(sub.c[static_cast<size_t>(i)] - br[static_cast<size_t>(i)]))) all = false;
    const CochainComplex complex = build_complex(s, regular_bimodule(s), 2);
    if (!is_zero(MatrixQ(complex.boundary(1) - classical::d1(a)))) all = false;
    if (!is_zero(MatrixQ(complex.boundary(2) - classical::d2(a)))) all = false;
  }
  criterion(6, "pre-Lie checker, sub-adjacent bracket, D1 and D2 match the classical oracle", all,
            "100 random 2-dim instances");
}

// 7. Cohomology dimensions of the two zero-product fixtures.
void criterion_cohomology_counts() {
  auto total_h = [](const std::vector<CohomologyRow>& rows, int degree) {
    Index h = 0;
    for (const auto& row : rows)
      if (row.degree == degree) h += row.dim_h;
    return h;
  };
  const SuperSpace even1 = SuperSpace::make({"e"}, {});
  const Structure s1 = make_structure(Variety::PreLie, even1, {BilinearOp::zero("circ", even1)},
                                      identity_map(even1), identity_map(even1));
  const auto rows1 = cohomology_dims(s1, regular_bimodule(s1), 3);
  const bool pass1 = total_h(rows1, 1) == 1 && total_h(rows1, 2) == 1 && total_h(rows1, 3) == 0;

  const SuperSpace odd1 = SuperSpace::make({}, {"th"});
  const Structure s2 = make_structure(Variety::PreLie, odd1, {BilinearOp::zero("circ", odd1)},
                                      identity_map(odd1), identity_map(odd1));
  const auto rows2 = cohomology_dims(s2, regular_bimodule(s2), 3);
  const bool pass2 = total_h(rows2, 1) == 1 && total_h(rows2, 2) == 1 && total_h(rows2, 3) == 1;

  criterion(7, "zero-product fixtures give H = (1,1,0) and H = (1,1,1)", pass1 && pass2);
}

// 8. Search oracle on the idempotent fixture.
void criterion_search_oracle() {
  const Structure s = gen::idempotent1();
  SearchSpec spec;
  spec.target = SearchTarget::RotaBaxter;
  spec.shape = SearchShape::Diagonal;
  spec.grid = {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
  spec.weight = Rational(-1);
  const SearchResult minus1 = run_search(s, nullptr, spec);
  spec.weight = Rational(0);
  const SearchResult zero = run_search(s, nullptr, spec);
  const bool pass = minus1.found.size() == 2 && minus1.found[0].map.mat(0, 0) == Rational(0) &&
                    minus1.found[1].map.mat(0, 0) == Rational(1) && zero.found.size() == 1 &&
                    zero.found[0].map.mat(0, 0) == Rational(0);
  criterion(8, "diagonal search returns {0, 1} at weight -1 and {0} at weight 0", pass);
}

} // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  criterion_d_squared();
  criterion_rb_minus1();
  criterion_o_operator_constructions();
  criterion_diagram_coherence();
  criterion_transpose();
  criterion_classical_oracle();
  criterion_cohomology_counts();
  criterion_search_oracle();
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
          .count();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << elapsed
            << " ms)" << std::endl;
  return failures == 0 ? 0 : 1;
}
