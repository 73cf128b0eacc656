#include <doctest.h>

#include "generators.hpp"

using namespace bihom;

TEST_CASE("zero actions pass every bimodule checker") {
  for (Variety v : {Variety::Associative, Variety::PreLie, Variety::Lie, Variety::LDendriform}) {
    const SuperSpace sp = SuperSpace::make({"e"}, {"f"});
    std::vector<BilinearOp> products;
    if (v == Variety::LDendriform)
      products = {BilinearOp::zero("succ", sp), BilinearOp::zero("prec", sp)};
    else
      products = {BilinearOp::zero("mu", sp)};
    const Structure s = make_structure(v, sp, products, identity_map(sp), identity_map(sp));
    Bimodule bm;
    bm.base = s;
    bm.space = SuperSpace::make({"v"}, {"w"});
    bm.alphaV = identity_map(bm.space);
    bm.betaV = identity_map(bm.space);
    const size_t count = v == Variety::LDendriform ? 4 : (v == Variety::Lie ? 1 : 2);
    const std::vector<std::string> names = v == Variety::LDendriform
                                               ? std::vector<std::string>{"l_succ", "r_succ",
                                                                          "l_prec", "r_prec"}
                                           : v == Variety::Lie ? std::vector<std::string>{"rho"}
                                                               : std::vector<std::string>{"l", "r"};
    for (size_t a = 0; a < count; ++a)
      bm.actions.push_back(Action{names[a], std::vector<MatrixQ>(2, MatrixQ::Zero(2, 2))});
    CHECK(check_bimodule(bm).pass());
  }
}

TEST_CASE("regular bimodule principle: regular passes iff the structure passes") {
  // passing instances of each variety
  for (const Structure& s : gen::associative_instances(2, 1))
    CHECK(check_bimodule(regular_bimodule(s)).pass());
  for (const Structure& s : gen::prelie_instances(2, 1))
    CHECK(check_bimodule(regular_bimodule(s)).pass());
  for (const Structure& s : gen::lie_instances(2, 1))
    CHECK(check_bimodule(regular_bimodule(s)).pass());
  for (const Structure& s : gen::ldend_instances())
    CHECK(check_bimodule(regular_bimodule(s)).pass());

  // failing instances: the regular bimodule must fail too
  {
    const SuperSpace sp = SuperSpace::make({"e1", "e2"}, {});
    BilinearOp bad = gen::op_of("circ", sp, {{0, 0, 1, 1}, {1, 0, 0, 1}});
    const Structure s =
        make_structure(Variety::PreLie, sp, {bad}, identity_map(sp), identity_map(sp));
    REQUIRE_FALSE(check_bihom_prelie(s).pass());
    CHECK_FALSE(check_bimodule(regular_bimodule(s)).pass());

    BilinearOp mu = gen::op_of("mu", sp, {{0, 0, 1, 1}, {1, 0, 0, 1}});
    const Structure a =
        make_structure(Variety::Associative, sp, {mu}, identity_map(sp), identity_map(sp));
    REQUIRE_FALSE(check_bihom_associative(a).pass());
    CHECK_FALSE(check_bimodule(regular_bimodule(a)).pass());
  }
  {
    // idempotent products as an L-dendriform pair fail both the structure
    // checker and the regular bimodule checker
    const Structure a = gen::idempotent1();
    BilinearOp succ = gen::op_of("succ", a.space, {{0, 0, 0, 1}});
    BilinearOp prec = gen::op_of("prec", a.space, {{0, 0, 0, 1}});
    const Structure s =
        make_structure(Variety::LDendriform, a.space, {succ, prec}, a.alpha, a.beta);
    REQUIRE_FALSE(check_bihom_ldendriform(s).pass());
    CHECK_FALSE(check_bimodule(regular_bimodule(s)).pass());
  }
}

TEST_CASE("adjoint representation of generated Lie structures") {
  for (const Structure& s : gen::lie_instances(2, 2))
    CHECK(check_bimodule(adjoint_bimodule(s)).pass());
}

TEST_CASE("module K-superalgebra checker") {
  SUBCASE("zero module product passes") {
    const Structure s = gen::grassmann1();
    Bimodule bm = regular_bimodule(s);
    for (auto& p : bm.products)
      for (auto& m : p.c) m.setZero();
    CHECK(check_module_k_superalgebra(bm).pass());
  }
  SUBCASE("regular bimodule with the structure's own product passes") {
    for (const Structure& s : gen::associative_instances(2, 1))
      CHECK(check_module_k_superalgebra(regular_bimodule(s)).pass());
    for (const Structure& s : gen::prelie_instances(2, 1))
      CHECK(check_module_k_superalgebra(regular_bimodule(s)).pass());
    for (const Structure& s : gen::ldend_instances())
      CHECK(check_module_k_superalgebra(regular_bimodule(s)).pass());
  }
  SUBCASE("Lie regular bimodule with its own bracket passes") {
    for (const Structure& s : gen::lie_instances(2, 1))
      CHECK(check_module_k_superalgebra(regular_bimodule(s)).pass());
  }
  SUBCASE("l = 0 with a nonzero product fails") {
    const Structure s = gen::idempotent1();
    Bimodule bm = regular_bimodule(s);
    for (auto& m : bm.actions[0].m) m.setZero(); // kill l, keep r and mu_V
    // with l = 0 the bimodule axioms still hold (every side carries l), so
    // the failure surfaces in the K-condition mu_V(aV u, l(x)v) = mu_V(r(x)u, bV v)
    const Report rep = check_module_k_superalgebra(bm);
    REQUIRE_FALSE(rep.pass());
    const CheckItem* item = rep.find("assoc.k.middle");
    REQUIRE(item != nullptr);
    CHECK_FALSE(item->pass);
    // the K-condition itself fails too once the actions are taken at face
    // value: mu_V(alphaV(u), l(x)v) = 0 but mu_V(r(x)u, betaV(v)) = e
    Report direct;
    ItemRecorder rec("assoc.k.middle.direct", 10);
    const VectorQ e = basis_vector(bm.space, 0);
    rec.record({0, 0, 0},
               VectorQ(apply_bilinear(bm.product(), bm.alphaV.mat * e, bm.left().of_basis(0) * e) -
                       apply_bilinear(bm.product(), bm.right().of_basis(0) * e, bm.betaV.mat * e)));
    direct.items.push_back(rec.take());
    CHECK_FALSE(direct.pass());
  }
  SUBCASE("missing module product is rejected") {
    const Structure s = gen::idempotent1();
    Bimodule bm = regular_bimodule(s);
    bm.products.clear();
    CHECK_THROWS_AS(check_module_k_superalgebra(bm), MissingModuleProduct);
  }
}

TEST_CASE("sub-adjacent transfer: pre-Lie O-operator gives a Lie O-operator for (l-r, r-l)") {
  for (const Structure& s : gen::prelie_instances(2, 1)) {
    if (!is_invertible(s.alpha.mat) || !is_invertible(s.beta.mat)) continue;
    const Bimodule reg = regular_bimodule(s);
    SearchSpec spec;
    spec.target = SearchTarget::OOperator;
    spec.shape = SearchShape::Diagonal;
    spec.grid = {Rational(-1), Rational(0), Rational(1)};
    const auto found = run_search(s, &reg, spec).found;
    if (found.empty()) continue;
    // literal transferred actions: rho = l - r over the sub-adjacent
    // bracket, entered directly into the O-operator identity
    Bimodule lie_bm;
    lie_bm.base = subadjacent(s);
    lie_bm.space = reg.space;
    lie_bm.alphaV = reg.alphaV;
    lie_bm.betaV = reg.betaV;
    Action rho;
    rho.name = "rho";
    for (size_t a = 0; a < reg.left().m.size(); ++a)
      rho.m.push_back(MatrixQ(reg.left().m[a] - reg.right().m[a]));
    lie_bm.actions = {rho};
    for (const OperatorSpec& T : found) CHECK(check_o_operator(lie_bm.base, lie_bm, T).pass());
    // the transfer construction itself certifies the twisted adjoint form
    CHECK(check_bimodule(bimodule_transfer(reg, BimoduleTransferKind::PreLieToLie)).pass());
  }
}

TEST_CASE("L-dendriform transfer: summed actions give an O-operator of the horizontal product") {
  for (const Structure& s : gen::ldend_instances()) {
    if (!is_invertible(s.alpha.mat) || !is_invertible(s.beta.mat)) continue;
    const Bimodule reg = regular_bimodule(s);
    SearchSpec spec;
    spec.target = SearchTarget::OOperator;
    spec.shape = SearchShape::Diagonal;
    spec.grid = {Rational(0), Rational(1)};
    const auto found = run_search(s, &reg, spec).found;
    const Bimodule summed = bimodule_transfer(reg, BimoduleTransferKind::LDendToAssoc);
    for (const OperatorSpec& T : found) CHECK(check_o_operator(summed.base, summed, T).pass());
  }
}

TEST_CASE("rb-twisted actions produce an L-dendriform bimodule") {
  const Structure s = gen::nilpotent2();
  MatrixQ rm = MatrixQ::Zero(2, 2);
  rm(0, 0) = Rational(2);
  rm(1, 1) = Rational(1);
  const Bimodule bm = regular_bimodule(s);
  const OperatorSpec r = rota_baxter_spec("R", EvenMap{s.space, s.space, rm}, Rational(0));
  const OperatorSpec rv{OperatorKind::ModuleRotaBaxter, "RV", EvenMap{bm.space, bm.space, rm},
                        Rational(0), {}};
  REQUIRE(check_module_rota_baxter(s, bm, r, rv).pass());
  const Bimodule twisted = bimodule_transfer(bm, BimoduleTransferKind::RBTwistedActions, &r, &rv);
  CHECK(check_bimodule(twisted).pass());
  CHECK(twisted.variety() == Variety::LDendriform);

  // with R = R_V = 0 all four actions vanish
  const MatrixQ zero = MatrixQ::Zero(2, 2);
  const OperatorSpec r0 = rota_baxter_spec("R", EvenMap{s.space, s.space, zero}, Rational(0));
  const OperatorSpec rv0{OperatorKind::ModuleRotaBaxter, "RV", EvenMap{bm.space, bm.space, zero},
                         Rational(0), {}};
  const Bimodule trivial = bimodule_transfer(bm, BimoduleTransferKind::RBTwistedActions, &r0, &rv0);
  for (const auto& act : trivial.actions)
    for (const auto& m : act.m) CHECK(is_zero(m));
}
