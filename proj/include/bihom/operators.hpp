#pragma once

#include <optional>

#include "bihom/bimodule.hpp"

namespace bihom {

enum class OperatorKind { RotaBaxter, OOperator, ExtendedOOperator, ModuleRotaBaxter };

std::string operator_kind_name(OperatorKind k);
OperatorKind operator_kind_from_name(std::string_view name);

// A linear operator under test: R : A -> A, T : V -> A or R_V : V -> V,
// with its weight and, for extended O-operators, the modification map T'.
struct OperatorSpec {
  OperatorKind kind = OperatorKind::RotaBaxter;
  std::string name;
  EvenMap map;
  Rational weight = Rational(0);
  std::optional<EvenMap> modification;
};

OperatorSpec rota_baxter_spec(std::string name, EvenMap map, Rational weight);

// R(x) * R(y) = R(R(x) * y + x * R(y) + weight x * y) for every product of
// the structure, plus commutation of R with alpha and beta.
Report check_rota_baxter(const Structure& s, const OperatorSpec& op, const CheckOptions& opt = {});

// The variety-specific super O-operator identity. Each variety gets the
// literal identity of its definition; they are not unified.
Report check_o_operator(const Structure& s, const Bimodule& bm, const OperatorSpec& op,
                        const CheckOptions& opt = {});

// Extended super O-operator with modification T', associative case only.
Report check_extended_o_operator(const Structure& s, const Bimodule& bm, const OperatorSpec& op,
                                 const CheckOptions& opt = {});

// Rota-Baxter operator R_V on a bimodule, relative to a weight-zero
// Rota-Baxter operator R on the structure.
Report check_module_rota_baxter(const Structure& s, const Bimodule& bm, const OperatorSpec& R,
                                const OperatorSpec& RV, const CheckOptions& opt = {});

} // namespace bihom
