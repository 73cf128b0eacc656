#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bihom/cohomology.hpp"
#include "bihom/constructions.hpp"
#include "bihom/workspace.hpp"

namespace {

using namespace bihom;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct OutputOptions {
  std::string format = "text";
  int witness_cap = 10;
};

void emit_report(const Report& rep, const OutputOptions& out) {
  std::cout << (out.format == "json" ? to_json(rep) + "\n" : to_text(rep));
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BIHOMWB_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
  }
  return p;
}

void write_workspace(const WorkspaceFile& ws, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << serialize_workspace(ws);
    return;
  }
  const auto resolved = resolve_output(path);
  std::ofstream f(resolved);
  if (!f) throw ParseError("cannot write '" + resolved.string() + "'");
  f << serialize_workspace(ws);
  std::cout << "wrote " << resolved.string() << "\n";
}

std::vector<Rational> parse_grid(const std::string& grid) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= grid.size()) {
    size_t end = grid.find(',', pos);
    if (end == std::string::npos) end = grid.size();
    const std::string tok = grid.substr(pos, end - pos);
    if (!tok.empty()) out.push_back(parse_rational(tok));
    pos = end + 1;
  }
  if (out.empty()) throw ParseError("empty grid");
  return out;
}

int run_check(const std::string& file, const std::string& variety, const std::string& bimodule_name,
              const std::string& ksuper_name, const std::string& rota_baxter,
              const std::string& o_operator, const std::string& extended, const std::string& modification,
              const std::vector<std::string>& module_rb, const std::string& module_name,
              const std::string& weight, const OutputOptions& out) {
  const WorkspaceFile ws = load_workspace(file);
  const Structure s = ws.structure();
  CheckOptions opt{out.witness_cap};
  std::optional<Rational> weight_override;
  if (!weight.empty()) weight_override = parse_rational(weight);

  Report rep;
  if (!variety.empty()) {
    const Variety requested = variety_from_name(variety);
    if (requested != s.variety)
      throw VarietyMismatch("workspace structure is tagged " + variety_name(s.variety) +
                            ", not " + variety);
    rep = check_variety(s, opt);
  } else if (!bimodule_name.empty()) {
    rep = check_bimodule(ws.bimodule(bimodule_name), opt);
  } else if (!ksuper_name.empty()) {
    rep = check_module_k_superalgebra(ws.bimodule(ksuper_name), opt);
  } else if (!rota_baxter.empty()) {
    rep = check_rota_baxter(s, ws.make_operator(rota_baxter, OperatorKind::RotaBaxter, ws.space,
                                                weight_override),
                            opt);
  } else if (!o_operator.empty()) {
    if (module_name.empty()) throw UnknownName("--o-operator needs --module");
    const Bimodule bm = ws.bimodule(module_name);
    rep = check_o_operator(s, bm,
                           ws.make_operator(o_operator, OperatorKind::OOperator, bm.space,
                                            weight_override),
                           opt);
  } else if (!extended.empty()) {
    if (module_name.empty()) throw UnknownName("--extended-o-operator needs --module");
    if (modification.empty()) throw UnknownName("--extended-o-operator needs --modification");
    const Bimodule bm = ws.bimodule(module_name);
    rep = check_extended_o_operator(s, bm,
                                    ws.make_operator(extended, OperatorKind::ExtendedOOperator,
                                                     bm.space, weight_override, modification),
                                    opt);
  } else if (!module_rb.empty()) {
    if (module_rb.size() != 2) throw UnknownName("--module-rota-baxter needs R and RV");
    if (module_name.empty()) throw UnknownName("--module-rota-baxter needs --module");
    const Bimodule bm = ws.bimodule(module_name);
    rep = check_module_rota_baxter(
        s, bm, ws.make_operator(module_rb[0], OperatorKind::RotaBaxter, ws.space, Rational(0)),
        ws.make_module_operator(module_name, module_rb[1], OperatorKind::ModuleRotaBaxter,
                                Rational(0)),
        opt);
  } else {
    rep = check_variety(s, opt);
  }
  emit_report(rep, out);
  return rep.pass() ? kExitPass : kExitViolation;
}

int run_construct(const std::string& file, const std::string& recipe, const std::string& op_name,
                  const std::string& rv_name, const std::string& weight,
                  const std::string& module_name, const std::string& twist_alpha,
                  const std::string& twist_beta, const std::string& kind, bool image,
                  const std::string& grid, const std::string& shape, unsigned long long cap,
                  const std::string& out_path, const OutputOptions& out) {
  const WorkspaceFile ws = load_workspace(file);
  const Structure s = ws.structure();
  CheckOptions opt{out.witness_cap};
  auto prov = [&](const std::string& verdict) {
    return Provenance{recipe, file, verdict};
  };
  auto rb_op = [&](const Rational& w) {
    if (op_name.empty()) throw UnknownName("recipe '" + recipe + "' needs --operator");
    return ws.make_operator(op_name, OperatorKind::RotaBaxter, ws.space, w);
  };

  if (recipe == "supercommutator") {
    write_workspace(workspace_of(supercommutator(s, opt), prov("bracket computed")), out_path);
  } else if (recipe == "twisted-supercommutator") {
    write_workspace(workspace_of(twisted_supercommutator(s, opt), prov("bracket computed")),
                    out_path);
  } else if (recipe == "subadjacent") {
    write_workspace(workspace_of(subadjacent(s, opt), prov("certified lie")), out_path);
  } else if (recipe == "yau-twist") {
    if (twist_alpha.empty() || twist_beta.empty())
      throw UnknownName("recipe yau-twist needs --twist-alpha and --twist-beta");
    const EvenMap a{ws.space, ws.space, ws.map(twist_alpha).mat};
    const EvenMap b{ws.space, ws.space, ws.map(twist_beta).mat};
    write_workspace(workspace_of(yau_twist_prelie(s, a, b, opt), prov("certified prelie")),
                    out_path);
  } else if (recipe == "prelie-from-rb-assoc") {
    const Rational w = weight.empty() ? Rational(-1) : parse_rational(weight);
    write_workspace(workspace_of(prelie_from_rb_assoc(s, rb_op(w), w, opt),
                                 prov("certified prelie")),
                    out_path);
  } else if (recipe == "lie-from-rb-assoc") {
    write_workspace(workspace_of(lie_from_rb_assoc_minus1(s, rb_op(Rational(-1)), opt),
                                 prov("certified lie; R recertified at weight -1")),
                    out_path);
  } else if (recipe == "prelie-star") {
    write_workspace(workspace_of(prelie_star_from_rb_prelie(s, rb_op(Rational(0)), opt),
                                 prov("certified prelie; R recertified at weight 0")),
                    out_path);
  } else if (recipe == "prelie-from-o-op-lie" || recipe == "ldend-from-o-op-assoc" ||
             recipe == "ldend-from-o-op-prelie") {
    if (module_name.empty()) throw UnknownName("recipe '" + recipe + "' needs --module");
    if (op_name.empty()) throw UnknownName("recipe '" + recipe + "' needs --operator");
    const Bimodule bm = ws.bimodule(module_name);
    const OperatorSpec T =
        ws.make_operator(op_name, OperatorKind::OOperator, bm.space, Rational(0));
    if (recipe == "prelie-from-o-op-lie") {
      write_workspace(workspace_of(prelie_from_o_op_lie(s, bm, T, opt), prov("certified prelie")),
                      out_path);
    } else if (recipe == "ldend-from-o-op-assoc") {
      write_workspace(workspace_of(ldend_from_o_op_assoc(s, bm, T, opt),
                                   prov("certified ldendriform")),
                      out_path);
    } else {
      const LdendFromPreLie built = ldend_from_o_op_prelie(s, bm, T, opt);
      write_workspace(workspace_of(image ? built.on_image : built.on_module,
                                   prov("certified ldendriform")),
                      out_path);
    }
  } else if (recipe == "ldend-derived") {
    const LdendDerived derived = ldend_derived(s, opt);
    auto suffixed = [&](const std::string& part) {
      if (out_path.empty() || out_path == "-") return out_path;
      std::filesystem::path p(out_path);
      std::filesystem::path q = p.parent_path() / (p.stem().string() + "." + part + p.extension().string());
      return q.string();
    };
    write_workspace(workspace_of(derived.vertical, prov("certified prelie")), suffixed("vertical"));
    write_workspace(workspace_of(derived.horizontal, prov("certified prelie")),
                    suffixed("horizontal"));
    write_workspace(workspace_of(derived.transpose, prov("certified ldendriform")),
                    suffixed("transpose"));
    write_workspace(workspace_of(derived.bracket, prov("certified lie")), suffixed("bracket"));
  } else if (recipe == "bimodule-transfer") {
    if (module_name.empty()) throw UnknownName("recipe bimodule-transfer needs --module");
    if (kind.empty()) throw UnknownName("recipe bimodule-transfer needs --kind");
    const Bimodule bm = ws.bimodule(module_name);
    BimoduleTransferKind k;
    if (kind == "prelie-to-lie")
      k = BimoduleTransferKind::PreLieToLie;
    else if (kind == "ldend-to-assoc")
      k = BimoduleTransferKind::LDendToAssoc;
    else if (kind == "rb-twisted")
      k = BimoduleTransferKind::RBTwistedActions;
    else
      throw UnknownName("unknown transfer kind '" + kind + "'");
    std::optional<OperatorSpec> R, RV;
    if (k == BimoduleTransferKind::RBTwistedActions) {
      if (op_name.empty() || rv_name.empty())
        throw UnknownName("rb-twisted transfer needs --operator and --module-operator");
      R = ws.make_operator(op_name, OperatorKind::RotaBaxter, ws.space, Rational(0));
      RV = ws.make_module_operator(module_name, rv_name, OperatorKind::ModuleRotaBaxter,
                                   Rational(0));
    }
    const Bimodule transferred =
        bimodule_transfer(bm, k, R ? &*R : nullptr, RV ? &*RV : nullptr, opt);
    write_workspace(workspace_of(transferred.base, transferred, module_name,
                                 prov("certified " + variety_name(transferred.variety()))),
                    out_path);
  } else if (recipe == "compatible-ldend") {
    SearchSpec spec;
    spec.grid = parse_grid(grid.empty() ? "-1,0,1" : grid);
    spec.shape = search_shape_from_name(shape.empty() ? "diagonal" : shape);
    spec.cap = cap;
    const auto result = compatible_ldend_exists(s, spec, opt);
    if (!result) {
      std::cout << "inconclusive: no invertible weight-0 O-operator in the searched grid\n";
      return kExitPass;
    }
    write_workspace(workspace_of(*result, prov("certified ldendriform; vertical equals input")),
                    out_path);
  } else {
    throw UnknownName("unknown recipe '" + recipe + "'");
  }
  return kExitPass;
}

int run_cohomology(const std::string& file, const std::string& module_name, int max_degree,
                   const OutputOptions& out) {
  const WorkspaceFile ws = load_workspace(file);
  const Structure s = ws.structure();
  const Bimodule bm = ws.bimodule(module_name);
  const CochainComplex complex = build_complex(s, bm, max_degree);
  const Report squared = verify_d_squared(complex);
  if (!squared.pass()) {
    emit_report(squared, out);
    throw DSquaredViolation("coboundary does not square to zero; refusing to print dimensions");
  }
  const auto rows = cohomology_dims(complex);
  if (out.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows)
      j.push_back({{"degree", row.degree},
                   {"parity", row.parity},
                   {"dim_c", row.dim_c},
                   {"dim_z", row.dim_z},
                   {"dim_b", row.dim_b},
                   {"dim_h", row.dim_h}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "d^2 = 0 verified up to degree " << max_degree << "\n";
    std::cout << "degree  parity  dim C  dim Z  dim B  dim H\n";
    for (const auto& row : rows)
      std::cout << "  " << row.degree << "       " << row.parity << "       " << row.dim_c
                << "      " << row.dim_z << "      " << row.dim_b << "      " << row.dim_h << "\n";
    std::cout << "(H^1 is reported as ker D_1; no degree-0 quotient is applied)\n";
  }
  return kExitPass;
}

int run_search(const std::string& file, const std::string& target, const std::string& module_name,
               const std::string& grid, const std::string& shape, const std::string& weight,
               unsigned long long cap, const OutputOptions& out) {
  const WorkspaceFile ws = load_workspace(file);
  const Structure s = ws.structure();
  SearchSpec spec;
  if (target == "rota-baxter")
    spec.target = SearchTarget::RotaBaxter;
  else if (target == "o-operator")
    spec.target = SearchTarget::OOperator;
  else
    throw UnknownName("unknown search target '" + target + "'");
  spec.grid = parse_grid(grid);
  spec.shape = search_shape_from_name(shape);
  spec.weight = weight.empty() ? Rational(0) : parse_rational(weight);
  spec.cap = cap;

  std::optional<Bimodule> bm;
  if (spec.target == SearchTarget::OOperator) {
    if (module_name.empty()) throw UnknownName("o-operator search needs --module");
    bm = ws.bimodule(module_name);
  }
  const SuperSpace& domain = bm ? bm->space : ws.space;
  std::cout << "search space: " << spec.grid.size() << "^"
            << search_positions(domain, ws.space, spec.shape).size() << " candidates\n";
  const SearchResult result = run_search(s, bm ? &*bm : nullptr, spec);
  if (out.format == "json") {
    nlohmann::json j;
    j["space_size"] = result.space_size;
    j["found"] = nlohmann::json::array();
    for (const auto& cand : result.found) {
      nlohmann::json jc;
      jc["name"] = cand.name;
      jc["weight"] = to_string(cand.weight);
      nlohmann::json entries = nlohmann::json::array();
      for (Index src = 0; src < cand.map.mat.cols(); ++src)
        for (Index dst = 0; dst < cand.map.mat.rows(); ++dst)
          if (!cand.map.mat(dst, src).is_zero())
            entries.push_back({{"src", domain.names[static_cast<size_t>(src)]},
                               {"dst", ws.space.names[static_cast<size_t>(dst)]},
                               {"value", to_string(cand.map.mat(dst, src))}});
      jc["entries"] = entries;
      j["found"].push_back(jc);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verified candidates: " << result.found.size() << "\n";
    for (const auto& cand : result.found) {
      std::cout << "  " << cand.name << " (weight " << to_string(cand.weight) << "):";
      bool any = false;
      for (Index src = 0; src < cand.map.mat.cols(); ++src)
        for (Index dst = 0; dst < cand.map.mat.rows(); ++dst)
          if (!cand.map.mat(dst, src).is_zero()) {
            std::cout << " " << domain.names[static_cast<size_t>(src)] << "->"
                      << to_string(cand.map.mat(dst, src)) << "*"
                      << ws.space.names[static_cast<size_t>(dst)];
            any = true;
          }
      if (!any) std::cout << " zero";
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int run_report(const std::string& file, const OutputOptions& out) {
  const WorkspaceFile ws = load_workspace(file);
  if (out.format == "json") {
    nlohmann::json j;
    j["variety"] = variety_name(ws.metadata.variety);
    j["space"] = {{"even", ws.space.even_dim()}, {"odd", ws.space.dim() - ws.space.even_dim()}};
    j["products"] = nlohmann::json::array();
    for (const auto& p : ws.products) j["products"].push_back(p.name);
    j["maps"] = nlohmann::json::array();
    for (const auto& m : ws.maps) j["maps"].push_back(m.name);
    j["modules"] = nlohmann::json::array();
    for (const auto& m : ws.modules) j["modules"].push_back(m.name);
    if (ws.provenance)
      j["provenance"] = {{"recipe", ws.provenance->recipe},
                         {"source", ws.provenance->source},
                         {"verdict", ws.provenance->verdict}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "workspace: " << file << "\n";
    std::cout << "  variety: " << variety_name(ws.metadata.variety) << "\n";
    std::cout << "  space: " << ws.space.even_dim() << " even, "
              << ws.space.dim() - ws.space.even_dim() << " odd\n";
    std::cout << "  products:";
    for (const auto& p : ws.products) std::cout << " " << p.name;
    std::cout << "\n  maps:";
    for (const auto& m : ws.maps) std::cout << " " << m.name;
    std::cout << "\n  modules:";
    for (const auto& m : ws.modules) std::cout << " " << m.name;
    std::cout << "\n";
    if (ws.provenance)
      std::cout << "  provenance: " << ws.provenance->recipe << " from " << ws.provenance->source
                << " (" << ws.provenance->verdict << ")\n";
  }
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for BiHom superalgebras: axiom checking, operator verification, "
               "structure transfer and cohomology"};
  app.require_subcommand(1);
  OutputOptions out;

  std::string file, variety, bimodule_name, ksuper_name, rota_baxter, o_operator, extended,
      modification, module_name, weight;
  std::vector<std::string> module_rb;

  auto* check = app.add_subcommand("check", "run an axiom or operator checker");
  check->add_option("file", file)->required();
  check->add_option("--variety", variety, "variety checker to run");
  check->add_option("--bimodule", bimodule_name, "check the named module's bimodule axioms");
  check->add_option("--k-superalgebra", ksuper_name, "check the module-product compatibility");
  check->add_option("--rota-baxter", rota_baxter, "check a Rota-Baxter operator");
  check->add_option("--o-operator", o_operator, "check a super O-operator (needs --module)");
  check->add_option("--extended-o-operator", extended, "check an extended super O-operator");
  check->add_option("--modification", modification, "modification map T' for the extended check");
  check->add_option("--module-rota-baxter", module_rb, "R RV: check a module Rota-Baxter pair")
      ->expected(2);
  check->add_option("--module", module_name, "module name for operator checks");
  check->add_option("--weight", weight, "operator weight override");
  check->add_option("--output", out.format)->check(CLI::IsMember({"text", "json"}));
  check->add_option("--witness-cap", out.witness_cap);

  std::string recipe, rv_name, twist_alpha, twist_beta, kind, out_path, grid, shape, target;
  bool image = false;
  unsigned long long cap = 1000000;

  auto* construct = app.add_subcommand("construct", "run a structure-transfer construction");
  construct->add_option("file", file)->required();
  construct->add_option("--recipe", recipe)->required();
  construct->add_option("--operator", rota_baxter, "operator map name");
  construct->add_option("--module-operator", rv_name, "module operator map name");
  construct->add_option("--weight", weight);
  construct->add_option("--module", module_name);
  construct->add_option("--twist-alpha", twist_alpha);
  construct->add_option("--twist-beta", twist_beta);
  construct->add_option("--kind", kind, "bimodule transfer kind");
  construct->add_flag("--image", image, "write the structure on T(V) instead of V");
  construct->add_option("--grid", grid, "rational grid for compatible-ldend");
  construct->add_option("--shape", shape, "diagonal | triangular | full");
  construct->add_option("--cap", cap, "search space cap");
  construct->add_option("-o,--out", out_path, "output file ('-' for stdout)");
  construct->add_option("--output", out.format)->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--witness-cap", out.witness_cap);

  int max_degree = 3;
  auto* cohomology = app.add_subcommand("cohomology", "cochain spaces, d^2 = 0, H^n dimensions");
  cohomology->add_option("file", file)->required();
  cohomology->add_option("--module", module_name)->required();
  cohomology->add_option("--max-degree", max_degree);
  cohomology->add_option("--output", out.format)->check(CLI::IsMember({"text", "json"}));

  auto* search = app.add_subcommand("search", "bounded brute-force operator search");
  search->add_option("file", file)->required();
  search->add_option("--target", target)->required();
  search->add_option("--module", module_name);
  search->add_option("--grid", grid)->required();
  search->add_option("--shape", shape)->default_val("diagonal");
  search->add_option("--weight", weight);
  search->add_option("--cap", cap);
  search->add_option("--output", out.format)->check(CLI::IsMember({"text", "json"}));

  auto* report = app.add_subcommand("report", "summarize a workspace file");
  report->add_option("file", file)->required();
  report->add_option("--output", out.format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_check(file, variety, bimodule_name, ksuper_name, rota_baxter, o_operator, extended,
                       modification, module_rb, module_name, weight, out);
    if (construct->parsed())
      return run_construct(file, recipe, rota_baxter, rv_name, weight, module_name, twist_alpha,
                           twist_beta, kind, image, grid, shape, cap, out_path, out);
    if (cohomology->parsed()) return run_cohomology(file, module_name, max_degree, out);
    if (search->parsed())
      return run_search(file, target, module_name, grid, shape, weight, cap, out);
    if (report->parsed()) return run_report(file, out);
  } catch (const AxiomViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ImageNotWellDefined& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const DSquaredViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
