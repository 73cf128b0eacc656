#pragma once

#include <map>
#include <optional>

#include "bihom/operators.hpp"

namespace bihom {

// Self-contained workspace: one structure, its maps and operators, and any
// modules, in a line-oriented block format. Structure constants are sparse
// (basis-name keyed); rationals are canonical "p/q" strings; unknown keys
// are rejected.
struct NamedMap {
  std::string name;
  MatrixQ mat;
};

struct ModuleBlock {
  std::string name;
  SuperSpace space;
  std::vector<std::pair<std::string, std::vector<MatrixQ>>> actions;
  MatrixQ alphaV;
  MatrixQ betaV;
  std::vector<NamedMap> maps; // operators on the module space
  std::vector<BilinearOp> products;
};

struct Metadata {
  Variety variety = Variety::Associative;
  std::vector<std::string> product_names;
  std::map<std::string, Rational> weights;
};

struct Provenance {
  std::string recipe;
  std::string source;
  std::string verdict;
};

struct WorkspaceFile {
  int version = 1;
  SuperSpace space;
  std::vector<BilinearOp> products;
  std::vector<NamedMap> maps;
  std::vector<ModuleBlock> modules;
  Metadata metadata;
  std::optional<Provenance> provenance;

  const BilinearOp& product(std::string_view name) const;
  const NamedMap& map(std::string_view name) const;
  const ModuleBlock& module_block(std::string_view name) const;

  Structure structure() const;
  Bimodule bimodule(std::string_view module_name) const;
  OperatorSpec make_operator(std::string_view map_name, OperatorKind kind,
                             const SuperSpace& domain,
                             std::optional<Rational> weight_override = std::nullopt,
                             std::optional<std::string> modification = std::nullopt) const;
  // operator on a module space, resolved inside the module block
  OperatorSpec make_module_operator(std::string_view module_name, std::string_view map_name,
                                    OperatorKind kind,
                                    std::optional<Rational> weight_override = std::nullopt) const;
  Rational weight_of(std::string_view map_name) const; // 0 when unannotated
};

WorkspaceFile parse_workspace(std::string_view text);
WorkspaceFile load_workspace(const std::string& path);
std::string serialize_workspace(const WorkspaceFile& ws);

// Builds a workspace carrying the given structure (plus optional provenance),
// ready to serialize.
WorkspaceFile workspace_of(const Structure& s, std::optional<Provenance> provenance = std::nullopt);
WorkspaceFile workspace_of(const Structure& s, const Bimodule& bm, const std::string& module_name,
                           std::optional<Provenance> provenance = std::nullopt);

} // namespace bihom
