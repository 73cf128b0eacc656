#include <doctest.h>

#include <random>

#include "bihom/linalg.hpp"

using namespace bihom;

namespace {

MatrixQ mat2(long a, long b, long c, long d) {
  MatrixQ m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

MatrixQ random_matrix(std::mt19937& rng, Index rows, Index cols) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  MatrixQ m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rational(Int(num(rng)), Int(den(rng)));
  return m;
}

} // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(Int(2), Int(4)) == Rational(Int(1), Int(2)));
  CHECK(Rational(Int(3), Int(-6)) == Rational(Int(-1), Int(2)));
  CHECK(Rational(Int(0), Int(7)) == Rational(0));
  CHECK(to_string(Rational(Int(-7), Int(3))) == "-7/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-7/3") == Rational(Int(-7), Int(3)));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(to_string(parse_rational("-7/3")) == "-7/3"); // bit-exact round-trip
  CHECK_THROWS_AS(parse_rational("4/6"), ParseError);
  CHECK_THROWS_AS(parse_rational("4/1"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("+3"), ParseError);
  CHECK_THROWS_AS(parse_rational("007"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rank") {
  CHECK(rank(MatrixQ(0, 0)) == 0);
  CHECK(rank(MatrixQ(MatrixQ::Identity(2, 2))) == 2);
  CHECK(rank(mat2(1, 2, 2, 4)) == 1); // row 2 = 2 x row 1
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(MatrixQ(MatrixQ::Identity(2, 2))).empty());
  CHECK(kernel_basis(MatrixQ(MatrixQ::Zero(1, 2))).size() == 2);
  const auto basis = kernel_basis(mat2(1, 2, 2, 4));
  REQUIRE(basis.size() == 1);
  // proportional to (-2, 1): x + 2y = 0
  CHECK(basis[0](0) * Rational(1) == -Rational(2) * basis[0](1));
  CHECK(is_zero(VectorQ(mat2(1, 2, 2, 4) * basis[0])));
}

TEST_CASE("invert") {
  CHECK(is_zero(MatrixQ(invert(MatrixQ(MatrixQ::Identity(3, 3))) - MatrixQ::Identity(3, 3))));
  const MatrixQ d = invert(mat2(2, 0, 0, 3));
  CHECK(d(0, 0) == Rational(Int(1), Int(2)));
  CHECK(d(1, 1) == Rational(Int(1), Int(3)));
  const MatrixQ u = invert(mat2(1, 1, 0, 1));
  CHECK(u == mat2(1, -1, 0, 1));
  CHECK_THROWS_AS(invert(mat2(1, 2, 2, 4)), SingularMatrix);
}

TEST_CASE("rank-nullity and exactness properties") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    const MatrixQ m = random_matrix(rng, rows, cols);
    const auto kernel = kernel_basis(m);
    CHECK(rank(m) + static_cast<Index>(kernel.size()) == cols);
    for (const auto& v : kernel) CHECK(is_zero(VectorQ(m * v)));

    const MatrixQ a = random_matrix(rng, 3, 3);
    const MatrixQ b = random_matrix(rng, 3, 3);
    const MatrixQ c = random_matrix(rng, 3, 3);
    CHECK(MatrixQ((a * b) * c) == MatrixQ(a * (b * c))); // exact associativity
    if (is_invertible(a)) {
      CHECK(is_zero(MatrixQ(invert(a) * a - MatrixQ::Identity(3, 3))));
      CHECK(is_zero(MatrixQ(a * invert(a) - MatrixQ::Identity(3, 3))));
    }
  }
}

TEST_CASE("linear solver") {
  const MatrixQ m = mat2(1, 2, 2, 4);
  const LinearSolver<Rational> solver(m);
  VectorQ b(2);
  b << Rational(1), Rational(2);
  VectorQ x;
  REQUIRE(solver.solve(b, x));
  CHECK(VectorQ(m * x) == b);
  b << Rational(1), Rational(3); // inconsistent
  CHECK_FALSE(solver.solve(b, x));
}
