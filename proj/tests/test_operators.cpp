#include <doctest.h>

#include "generators.hpp"

using namespace bihom;

namespace {

OperatorSpec o_op(const EvenMap& map, const Rational& weight = Rational(0)) {
  return OperatorSpec{OperatorKind::OOperator, "T", map, weight, {}};
}

} // namespace

TEST_CASE("rota-baxter checker") {
  SUBCASE("R = 0 passes at every weight") {
    for (const Rational& w : {Rational(0), Rational(-1), Rational(3)})
      for (const Structure& s : {gen::idempotent1(), gen::grassmann1()}) {
        const OperatorSpec r =
            rota_baxter_spec("R", EvenMap{s.space, s.space, MatrixQ::Zero(s.space.dim(), s.space.dim())}, w);
        CHECK(check_rota_baxter(s, r).pass());
      }
  }
  SUBCASE("R = id at weight -1 on e*e = e") {
    const Structure s = gen::idempotent1();
    CHECK(check_rota_baxter(s, rota_baxter_spec("R", identity_map(s.space), Rational(-1))).pass());
  }
  SUBCASE("R = id at weight 0 on e*e = e fails: LHS e, RHS 2e") {
    const Structure s = gen::idempotent1();
    const Report rep = check_rota_baxter(s, rota_baxter_spec("R", identity_map(s.space), Rational(0)));
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.find("rota.baxter.mu")->witnesses[0].residual(0) == Rational(-1));
  }
  SUBCASE("R = -lambda id is Rota-Baxter of weight lambda on generated instances") {
    for (const Rational& lambda : {Rational(1), Rational(-1), Rational(2)})
      for (const Structure& s : gen::associative_instances()) {
        MatrixQ r = MatrixQ::Identity(s.space.dim(), s.space.dim());
        for (Index i = 0; i < s.space.dim(); ++i) r(i, i) = -lambda;
        CHECK(check_rota_baxter(s, rota_baxter_spec("R", EvenMap{s.space, s.space, r}, lambda))
                  .pass());
      }
  }
  SUBCASE("scaling: R of weight lambda gives cR of weight c lambda") {
    const Structure s = gen::idempotent1();
    for (long c : {2, -3}) {
      MatrixQ r = MatrixQ::Identity(1, 1); // weight -1 witness
      MatrixQ cr = Rational(c) * r;
      CHECK(check_rota_baxter(s, rota_baxter_spec("R", EvenMap{s.space, s.space, cr},
                                                  Rational(-c)))
                .pass());
    }
  }
}

TEST_CASE("o-operator checker") {
  SUBCASE("T = 0 at weight 0 passes for every variety") {
    for (Structure s : {gen::grassmann1(), gen::retag(gen::lsa2(Rational(2)), Variety::PreLie)}) {
      const Bimodule bm = regular_bimodule(s);
      const OperatorSpec t =
          o_op(EvenMap{bm.space, s.space, MatrixQ::Zero(s.space.dim(), bm.space.dim())});
      CHECK(check_o_operator(s, bm, t).pass());
    }
  }
  SUBCASE("a verified Rota-Baxter operator is an O-operator on the regular bimodule") {
    const Structure s = gen::nilpotent2();
    MatrixQ rm = MatrixQ::Zero(2, 2);
    rm(0, 0) = Rational(2);
    rm(1, 0) = Rational(1);
    rm(1, 1) = Rational(1);
    REQUIRE(check_rota_baxter(s, rota_baxter_spec("R", EvenMap{s.space, s.space, rm}, Rational(0)))
                .pass());
    CHECK(check_o_operator(s, regular_bimodule(s), o_op(EvenMap{s.space, s.space, rm})).pass());
  }
  SUBCASE("Lie variety: T = id at weight 0 on a nonzero bracket fails") {
    const Structure lie = twisted_supercommutator(gen::matrix11());
    REQUIRE_FALSE(lie.product().is_zero());
    const Report rep = check_o_operator(lie, adjoint_bimodule(lie), o_op(identity_map(lie.space)));
    CHECK_FALSE(rep.pass());
    // LHS [u,v], RHS T(2[u,v]): residual is -[u,v]
    const CheckItem* item = rep.find("o.operator.lie");
    REQUIRE(item != nullptr);
    const auto& w = item->witnesses[0];
    const VectorQ bracket = lie.product().mul_basis(w.where[0], w.where[1]);
    CHECK(VectorQ(-bracket) == w.residual);
  }
  SUBCASE("nonzero weight needs a module product") {
    Structure s = gen::grassmann1();
    Bimodule bm = regular_bimodule(s);
    bm.products.clear();
    CHECK_THROWS_AS(check_o_operator(s, bm, o_op(identity_map(s.space), Rational(1))),
                    MissingModuleProduct);
  }
  SUBCASE("rota-baxter check and o-operator check agree on the regular bimodule (weight 0)") {
    for (const Structure& s : gen::associative_instances(2, 1)) {
      const Bimodule bm = regular_bimodule(s);
      for (long c : {0, 1}) {
        MatrixQ r = MatrixQ::Identity(s.space.dim(), s.space.dim());
        for (Index i = 0; i < r.rows(); ++i) r(i, i) = Rational(c);
        const bool as_rb =
            check_rota_baxter(s, rota_baxter_spec("R", EvenMap{s.space, s.space, r}, Rational(0)))
                .pass();
        const bool as_oop = check_o_operator(s, bm, o_op(EvenMap{s.space, s.space, r})).pass();
        CHECK(as_rb == as_oop);
      }
    }
    for (const Structure& s : gen::lie_instances(2, 1)) {
      const Bimodule bm = regular_bimodule(s);
      MatrixQ r = MatrixQ::Zero(s.space.dim(), s.space.dim());
      const bool as_rb =
          check_rota_baxter(s, rota_baxter_spec("R", EvenMap{s.space, s.space, r}, Rational(0)))
              .pass();
      CHECK(as_rb == check_o_operator(s, bm, o_op(EvenMap{s.space, s.space, r})).pass());
    }
  }
}

TEST_CASE("extended o-operator checker") {
  const Structure s = gen::idempotent1();
  const Bimodule bm = regular_bimodule(s);
  auto extended = [&](const MatrixQ& t, const MatrixQ& tp, const Rational& w) {
    OperatorSpec op;
    op.kind = OperatorKind::ExtendedOOperator;
    op.name = "T";
    op.map = EvenMap{bm.space, s.space, t};
    op.weight = w;
    op.modification = EvenMap{bm.space, s.space, tp};
    return op;
  };
  SUBCASE("T' = 0 reduces to the plain O-operator verdict") {
    const MatrixQ zero = MatrixQ::Zero(1, 1);
    const MatrixQ id = MatrixQ::Identity(1, 1);
    CHECK(check_extended_o_operator(s, bm, extended(zero, zero, Rational(5))).pass());
    CHECK(check_extended_o_operator(s, bm, extended(id, zero, Rational(0))).pass() ==
          check_o_operator(s, bm, o_op(EvenMap{bm.space, s.space, id})).pass());
  }
  SUBCASE("lambda = 0 makes the modified conditions vacuous") {
    const MatrixQ zero = MatrixQ::Zero(1, 1);
    const MatrixQ id = MatrixQ::Identity(1, 1);
    CHECK(check_extended_o_operator(s, bm, extended(zero, id, Rational(0))).pass());
  }
  SUBCASE("T = 0, T' = id, lambda = 1: balance holds, identity fails by e") {
    const MatrixQ zero = MatrixQ::Zero(1, 1);
    const MatrixQ id = MatrixQ::Identity(1, 1);
    const Report rep = check_extended_o_operator(s, bm, extended(zero, id, Rational(1)));
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.find("extended.balance")->pass);
    const CheckItem* item = rep.find("extended.identity");
    REQUIRE_FALSE(item->pass);
    CHECK(item->witnesses[0].residual(0) == Rational(-1)); // LHS 0, RHS e
  }
}

TEST_CASE("module rota-baxter checker") {
  SUBCASE("R = 0, R_V = 0 passes") {
    const Structure s = gen::grassmann1();
    const Bimodule bm = regular_bimodule(s);
    const MatrixQ zero = MatrixQ::Zero(2, 2);
    const OperatorSpec r = rota_baxter_spec("R", EvenMap{s.space, s.space, zero}, Rational(0));
    const OperatorSpec rv{OperatorKind::ModuleRotaBaxter, "RV", EvenMap{bm.space, bm.space, zero},
                          Rational(0), {}};
    CHECK(check_module_rota_baxter(s, bm, r, rv).pass());
  }
  SUBCASE("regular bimodule with R_V = R passes exactly when R is weight-0 Rota-Baxter") {
    const Structure s = gen::nilpotent2();
    MatrixQ rm = MatrixQ::Zero(2, 2);
    rm(0, 0) = Rational(2);
    rm(1, 1) = Rational(1);
    const Bimodule bm = regular_bimodule(s);
    const OperatorSpec r = rota_baxter_spec("R", EvenMap{s.space, s.space, rm}, Rational(0));
    const OperatorSpec rv{OperatorKind::ModuleRotaBaxter, "RV", EvenMap{bm.space, bm.space, rm},
                          Rational(0), {}};
    REQUIRE(check_rota_baxter(s, r).pass());
    CHECK(check_module_rota_baxter(s, bm, r, rv).pass());
  }
  SUBCASE("R = 0, R_V = id with a nonzero action fails") {
    const Structure s = gen::grassmann1();
    const Bimodule bm = regular_bimodule(s);
    const MatrixQ zero = MatrixQ::Zero(2, 2);
    const OperatorSpec r = rota_baxter_spec("R", EvenMap{s.space, s.space, zero}, Rational(0));
    const OperatorSpec rv{OperatorKind::ModuleRotaBaxter, "RV",
                          EvenMap{bm.space, bm.space, MatrixQ::Identity(2, 2)}, Rational(0), {}};
    const Report rep = check_module_rota_baxter(s, bm, r, rv);
    CHECK_FALSE(rep.pass());
    // first identity reads 0 = R_V(x v): witness residual is -x v
    const CheckItem* item = rep.find("module.rb.action.left");
    REQUIRE(item != nullptr);
    CHECK_FALSE(item->pass);
  }
  SUBCASE("nonzero weight is rejected") {
    const Structure s = gen::idempotent1();
    const Bimodule bm = regular_bimodule(s);
    const OperatorSpec r = rota_baxter_spec("R", identity_map(s.space), Rational(-1));
    const OperatorSpec rv{OperatorKind::ModuleRotaBaxter, "RV", identity_map(bm.space),
                          Rational(0), {}};
    CHECK_THROWS_AS(check_module_rota_baxter(s, bm, r, rv), WeightNotZero);
  }
}
