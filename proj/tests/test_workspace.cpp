#include <doctest.h>

#include "generators.hpp"

#include <cstdlib>

#include "bihom/workspace.hpp"

using namespace bihom;

namespace {

const char* kMinimal = R"(version 1
space {
  even e
}
metadata {
  variety associative
  products mu
}
product mu {
}
map alpha { identity }
map beta { identity }
)";

const char* kGrassmann = R"(version 1
# exterior algebra on one generator
space {
  even one
  odd th
}
metadata {
  variety associative
  products mu
}
product mu {
  one one one 1
  one th th 1
  th one th 1
}
map alpha { identity }
map beta { identity }
)";

} // namespace

TEST_CASE("minimal file parses") {
  const WorkspaceFile ws = parse_workspace(kMinimal);
  CHECK(ws.space.dim() == 1);
  const Structure s = ws.structure();
  CHECK(s.product().is_zero());
  CHECK(check_bihom_associative(s).pass());
}

TEST_CASE("grassmann fixture parses to the exterior algebra") {
  const WorkspaceFile ws = parse_workspace(kGrassmann);
  const Structure s = ws.structure();
  CHECK(s.space.parity_of(1) == 1);
  // theta^2 = 0 in the parsed structure, matching the exterior oracle
  CHECK(is_zero(apply_bilinear(s.product(), basis_vector(s.space, 1), basis_vector(s.space, 1))));
  CHECK(check_bihom_associative(s).pass());
}

TEST_CASE("parity-violating structure constants are rejected") {
  const char* bad = R"(version 1
space {
  even e
  odd f
}
metadata {
  variety associative
  products mu
}
product mu {
  e e f 1
}
map alpha { identity }
map beta { identity }
)";
  CHECK_THROWS_AS(parse_workspace(bad), InvariantViolation);
}

TEST_CASE("unknown fields are rejected with line information") {
  const char* bad = R"(version 1
space { even e }
metadata {
  variety associative
  products mu
  flavour strawberry
}
product mu { }
map alpha { identity }
map beta { identity }
)";
  try {
    parse_workspace(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 6") != std::string::npos);
  }
}

TEST_CASE("non-canonical rationals are rejected") {
  const char* bad = R"(version 1
space { even e }
metadata {
  variety associative
  products mu
}
product mu { e e e 2/4 }
map alpha { identity }
map beta { identity }
)";
  CHECK_THROWS_AS(parse_workspace(bad), ParseError);
}

TEST_CASE("missing pieces are rejected") {
  CHECK_THROWS_AS(parse_workspace("space { even e }"), ParseError);   // version first
  CHECK_THROWS_AS(parse_workspace("version 1\n"), ParseError);        // no space
  CHECK_THROWS_AS(parse_workspace("version 2\n"), ParseError);        // bad version
}

TEST_CASE("round-trip stability: parse, serialize, parse") {
  auto stable = [](const WorkspaceFile& ws) {
    const std::string once = serialize_workspace(ws);
    const WorkspaceFile back = parse_workspace(once);
    CHECK(serialize_workspace(back) == once);
    CHECK(back.structure().product().same_constants(ws.structure().product()));
    CHECK(maps_equal(EvenMap{ws.space, ws.space, ws.map("alpha").mat},
                     EvenMap{back.space, back.space, back.map("alpha").mat}));
  };
  stable(parse_workspace(kMinimal));
  stable(parse_workspace(kGrassmann));
  for (const Structure& s : gen::prelie_instances(2, 1)) stable(workspace_of(s));
  // workspaces with modules and weights round-trip too
  {
    const Structure s = gen::grassmann1();
    WorkspaceFile ws = workspace_of(s, regular_bimodule(s), "V");
    ws.maps.push_back(NamedMap{"R", MatrixQ::Identity(2, 2)});
    ws.metadata.weights["R"] = Rational(-1);
    stable(ws);
  }
}

TEST_CASE("modules parse with actions, maps and products") {
  const Structure s = gen::grassmann1();
  const WorkspaceFile ws = workspace_of(s, regular_bimodule(s), "V");
  const WorkspaceFile back = parse_workspace(serialize_workspace(ws));
  const Bimodule bm = back.bimodule("V");
  CHECK(check_bimodule(bm).pass());
  CHECK(check_module_k_superalgebra(bm).pass());
  CHECK_THROWS_AS(back.bimodule("W"), UnknownName);
}

TEST_CASE("fixture files round-trip, including module-scoped maps") {
  const char* fixtures = std::getenv("BIHOMWB_FIXTURES");
  if (fixtures == nullptr) return; // exercised under ctest
  for (const char* name : {"nilpotent.bhw", "grassmann1.bhw", "one_even_zero.bhw",
                           "one_odd_zero.bhw", "idempotent.bhw", "nonlie.bhw"}) {
    const WorkspaceFile ws = load_workspace(std::string(fixtures) + "/" + name);
    const std::string once = serialize_workspace(ws);
    CHECK(serialize_workspace(parse_workspace(once)) == once);
  }
  const WorkspaceFile nil = load_workspace(std::string(fixtures) + "/nilpotent.bhw");
  const OperatorSpec rv =
      nil.make_module_operator("V", "RV", OperatorKind::ModuleRotaBaxter, Rational(0));
  CHECK(rv.map.mat(1, 0) == Rational(1));
  CHECK_THROWS_AS(nil.make_module_operator("V", "nope", OperatorKind::ModuleRotaBaxter),
                  UnknownName);
}

TEST_CASE("operator resolution uses metadata weights") {
  const Structure s = gen::idempotent1();
  WorkspaceFile ws = workspace_of(s);
  ws.maps.push_back(NamedMap{"R", MatrixQ::Identity(1, 1)});
  ws.metadata.weights["R"] = Rational(-1);
  const WorkspaceFile back = parse_workspace(serialize_workspace(ws));
  const OperatorSpec op = back.make_operator("R", OperatorKind::RotaBaxter, back.space);
  CHECK(op.weight == Rational(-1));
  CHECK(check_rota_baxter(back.structure(), op).pass());
}
