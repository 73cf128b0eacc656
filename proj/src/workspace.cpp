#include "bihom/workspace.hpp"

#include <algorithm>
#include <utility>
#include <fstream>
#include <sstream>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    std::string tok;
    Line line;
    line.number = number;
    // single-line blocks split at brace boundaries: "map alpha { identity }"
    // becomes three logical lines
    auto flush = [&] {
      if (!line.tokens.empty()) lines.push_back(std::exchange(line, Line{number, {}}));
    };
    while (is >> tok) {
      if (tok == "{") {
        line.tokens.push_back(tok);
        flush();
      } else if (tok == "}") {
        flush();
        line.tokens.push_back(tok);
        flush();
      } else {
        line.tokens.push_back(tok);
      }
    }
    flush();
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& message) {
  throw ParseError("line " + std::to_string(line.number) + ": " + message);
}

class Parser {
public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  WorkspaceFile run() {
    WorkspaceFile ws;
    bool have_version = false, have_space = false, have_metadata = false;
    while (!done()) {
      const Line& line = peek();
      const std::string& key = line.tokens[0];
      if (key == "version") {
        if (have_version) fail(line, "duplicate version");
        if (line.tokens.size() != 2 || line.tokens[1] != "1") fail(line, "expected 'version 1'");
        ws.version = 1;
        have_version = true;
        next();
      } else if (key == "space") {
        if (!have_version) fail(line, "version must come first");
        if (have_space) fail(line, "duplicate space block");
        ws.space = parse_space(open_block("space", 1));
        have_space = true;
      } else if (key == "product") {
        require_space(have_space, line);
        ws.products.push_back(parse_product(ws.space, open_named_block("product")));
      } else if (key == "map") {
        require_space(have_space, line);
        ws.maps.push_back(parse_map(ws.space, ws.space, open_named_block("map")));
      } else if (key == "module") {
        require_space(have_space, line);
        ws.modules.push_back(parse_module(ws.space, open_named_block("module")));
      } else if (key == "metadata") {
        if (have_metadata) fail(line, "duplicate metadata block");
        parse_metadata(ws, open_block("metadata", 1));
        have_metadata = true;
      } else if (key == "provenance") {
        parse_provenance(ws, open_block("provenance", 1));
      } else {
        fail(line, "unknown key '" + key + "'");
      }
    }
    if (!have_version) throw ParseError("missing 'version 1' line");
    if (!have_space) throw ParseError("missing space block");
    if (!have_metadata) throw ParseError("missing metadata block");
    validate(ws);
    return ws;
  }

private:
  const std::vector<Line> lines_;
  size_t at_ = 0;

  bool done() const { return at_ >= lines_.size(); }
  const Line& peek() const { return lines_[at_]; }
  const Line& next() { return lines_[at_++]; }

  static void require_space(bool have_space, const Line& line) {
    if (!have_space) fail(line, "space block must come before this block");
  }

  struct Block {
    std::string name; // empty for anonymous blocks
    std::vector<Line> body;
    Line header;
  };

  Block open_block(const std::string& key, size_t header_tokens) {
    Block block;
    block.header = next();
    const auto& toks = block.header.tokens;
    if (toks.size() != header_tokens + 1 || toks.back() != "{")
      fail(block.header, "expected '" + key + (header_tokens == 2 ? " <name> {'" : " {'"));
    if (header_tokens == 2) block.name = toks[1];
    int depth = 1;
    while (depth > 0) {
      if (done()) fail(block.header, "unterminated block '" + key + "'");
      const Line& line = next();
      if (line.tokens.back() == "{") ++depth;
      if (line.tokens.size() == 1 && line.tokens[0] == "}") {
        --depth;
        if (depth == 0) break;
      }
      block.body.push_back(line);
    }
    return block;
  }

  Block open_named_block(const std::string& key) { return open_block(key, 2); }

  static SuperSpace parse_space(const Block& block) {
    std::vector<std::string> even, odd;
    bool seen_even = false, seen_odd = false;
    for (const Line& line : block.body) {
      if (line.tokens[0] == "even") {
        if (seen_even) fail(line, "duplicate even line");
        seen_even = true;
        even.assign(line.tokens.begin() + 1, line.tokens.end());
      } else if (line.tokens[0] == "odd") {
        if (seen_odd) fail(line, "duplicate odd line");
        seen_odd = true;
        odd.assign(line.tokens.begin() + 1, line.tokens.end());
      } else {
        fail(line, "unknown key '" + line.tokens[0] + "' in space block");
      }
    }
    try {
      return SuperSpace::make(std::move(even), std::move(odd));
    } catch (const InvariantViolation& e) {
      fail(block.header, e.what());
    }
  }

  static Index resolve(const SuperSpace& sp, const std::string& name, const Line& line) {
    if (auto idx = sp.index_of(name)) return *idx;
    fail(line, "unknown basis name '" + name + "'");
  }

  static BilinearOp parse_product(const SuperSpace& sp, const Block& block) {
    BilinearOp op = BilinearOp::zero(block.name, sp);
    for (const Line& line : block.body) {
      if (line.tokens.size() != 4) fail(line, "product entry must be 'x y z coeff'");
      const Index i = resolve(sp, line.tokens[0], line);
      const Index j = resolve(sp, line.tokens[1], line);
      const Index k = resolve(sp, line.tokens[2], line);
      if (!op.coeff(i, j, k).is_zero()) fail(line, "duplicate structure constant");
      Rational value;
      try {
        value = parse_rational(line.tokens[3]);
      } catch (const ParseError& e) {
        fail(line, e.what());
      }
      if (value.is_zero()) fail(line, "explicit zero structure constant");
      if (sp.parity_of(k) != (sp.parity_of(i) + sp.parity_of(j)) % 2)
        throw InvariantViolation("line " + std::to_string(line.number) +
                                 ": structure constant violates parity");
      op.set_coeff(i, j, k, value);
    }
    return op;
  }

  static NamedMap parse_map_block(const SuperSpace& domain, const SuperSpace& codomain,
                                  const Block& block) {
    NamedMap map;
    map.name = block.name;
    map.mat = MatrixQ::Zero(codomain.dim(), domain.dim());
    if (block.body.size() == 1 && block.body[0].tokens.size() == 1 &&
        block.body[0].tokens[0] == "identity") {
      if (!(domain == codomain)) fail(block.body[0], "identity shorthand needs equal spaces");
      map.mat = MatrixQ::Identity(domain.dim(), domain.dim());
      return map;
    }
    for (const Line& line : block.body) {
      if (line.tokens.size() != 3) fail(line, "map entry must be 'src dst coeff'");
      const Index src = resolve(domain, line.tokens[0], line);
      const Index dst = resolve(codomain, line.tokens[1], line);
      if (!map.mat(dst, src).is_zero()) fail(line, "duplicate map entry");
      Rational value;
      try {
        value = parse_rational(line.tokens[2]);
      } catch (const ParseError& e) {
        fail(line, e.what());
      }
      if (value.is_zero()) fail(line, "explicit zero map entry");
      if (codomain.parity_of(dst) != domain.parity_of(src))
        throw InvariantViolation("line " + std::to_string(line.number) +
                                 ": map entry violates parity");
      map.mat(dst, src) = value;
    }
    return map;
  }

  static NamedMap parse_map(const SuperSpace& domain, const SuperSpace& codomain,
                            const Block& block) {
    return parse_map_block(domain, codomain, block);
  }

  ModuleBlock parse_module(const SuperSpace& algebra, Block block) {
    ModuleBlock mod;
    mod.name = block.name;
    bool have_space = false, have_alpha = false, have_beta = false;
    // re-parse the captured body as nested blocks
    size_t i = 0;
    auto subblock = [&](size_t header_tokens) {
      Block sub;
      sub.header = block.body[i];
      if (sub.header.tokens.size() != header_tokens + 1 || sub.header.tokens.back() != "{")
        fail(sub.header, "malformed block inside module");
      if (header_tokens == 2) sub.name = sub.header.tokens[1];
      ++i;
      int depth = 1;
      while (depth > 0) {
        if (i >= block.body.size()) fail(sub.header, "unterminated block inside module");
        const Line& line = block.body[i++];
        if (line.tokens.back() == "{") ++depth;
        if (line.tokens.size() == 1 && line.tokens[0] == "}") {
          --depth;
          if (depth == 0) break;
        }
        sub.body.push_back(line);
      }
      return sub;
    };
    while (i < block.body.size()) {
      const Line& line = block.body[i];
      const std::string& key = line.tokens[0];
      if (key == "space") {
        if (have_space) fail(line, "duplicate space block in module");
        mod.space = parse_space(subblock(1));
        have_space = true;
      } else if (key == "map") {
        if (!have_space) fail(line, "module space must come first");
        Block sub = subblock(2);
        NamedMap m = parse_map_block(mod.space, mod.space, sub);
        if (m.name == "alphaV") {
          if (have_alpha) fail(sub.header, "duplicate alphaV");
          mod.alphaV = m.mat;
          have_alpha = true;
        } else if (m.name == "betaV") {
          if (have_beta) fail(sub.header, "duplicate betaV");
          mod.betaV = m.mat;
          have_beta = true;
        } else {
          for (const auto& existing : mod.maps)
            if (existing.name == m.name) fail(sub.header, "duplicate module map");
          mod.maps.push_back(std::move(m));
        }
      } else if (key == "action") {
        if (!have_space) fail(line, "module space must come first");
        Block sub = subblock(2);
        std::vector<MatrixQ> tensor(static_cast<size_t>(algebra.dim()),
                                    MatrixQ::Zero(mod.space.dim(), mod.space.dim()));
        for (const Line& entry : sub.body) {
          if (entry.tokens.size() != 4) fail(entry, "action entry must be 'a v w coeff'");
          const Index a = resolve(algebra, entry.tokens[0], entry);
          const Index v = resolve(mod.space, entry.tokens[1], entry);
          const Index w = resolve(mod.space, entry.tokens[2], entry);
          if (!tensor[static_cast<size_t>(a)](w, v).is_zero()) fail(entry, "duplicate action entry");
          Rational value;
          try {
            value = parse_rational(entry.tokens[3]);
          } catch (const ParseError& e) {
            fail(entry, e.what());
          }
          if (value.is_zero()) fail(entry, "explicit zero action entry");
          if (mod.space.parity_of(w) != (algebra.parity_of(a) + mod.space.parity_of(v)) % 2)
            throw InvariantViolation("line " + std::to_string(entry.number) +
                                     ": action entry violates parity");
          tensor[static_cast<size_t>(a)](w, v) = value;
        }
        mod.actions.emplace_back(sub.name, std::move(tensor));
      } else if (key == "product") {
        if (!have_space) fail(line, "module space must come first");
        mod.products.push_back(parse_product(mod.space, subblock(2)));
      } else {
        fail(line, "unknown key '" + key + "' in module block");
      }
    }
    if (!have_space) fail(block.header, "module block needs a space");
    if (!have_alpha || !have_beta) fail(block.header, "module block needs alphaV and betaV");
    return mod;
  }

  void parse_metadata(WorkspaceFile& ws, const Block& block) {
    bool have_variety = false, have_products = false;
    for (const Line& line : block.body) {
      const std::string& key = line.tokens[0];
      if (key == "variety") {
        if (have_variety) fail(line, "duplicate variety");
        if (line.tokens.size() != 2) fail(line, "expected 'variety <tag>'");
        try {
          ws.metadata.variety = variety_from_name(line.tokens[1]);
        } catch (const UnknownName& e) {
          fail(line, e.what());
        }
        have_variety = true;
      } else if (key == "products") {
        if (have_products) fail(line, "duplicate products line");
        if (line.tokens.size() < 2 || line.tokens.size() > 3)
          fail(line, "expected 'products <name>' or 'products <name> <name>'");
        ws.metadata.product_names.assign(line.tokens.begin() + 1, line.tokens.end());
        have_products = true;
      } else if (key == "weight") {
        if (line.tokens.size() != 3) fail(line, "expected 'weight <map> <rational>'");
        if (ws.metadata.weights.count(line.tokens[1])) fail(line, "duplicate weight");
        try {
          ws.metadata.weights[line.tokens[1]] = parse_rational(line.tokens[2]);
        } catch (const ParseError& e) {
          fail(line, e.what());
        }
      } else {
        fail(line, "unknown key '" + key + "' in metadata block");
      }
    }
    if (!have_variety) fail(block.header, "metadata needs a variety");
    if (!have_products) fail(block.header, "metadata needs a products line");
  }

  void parse_provenance(WorkspaceFile& ws, const Block& block) {
    if (ws.provenance) fail(block.header, "duplicate provenance block");
    Provenance prov;
    for (const Line& line : block.body) {
      const std::string& key = line.tokens[0];
      std::string value;
      for (size_t t = 1; t < line.tokens.size(); ++t) {
        if (t > 1) value += ' ';
        value += line.tokens[t];
      }
      if (key == "recipe")
        prov.recipe = value;
      else if (key == "source")
        prov.source = value;
      else if (key == "verdict")
        prov.verdict = value;
      else
        fail(line, "unknown key '" + key + "' in provenance block");
    }
    ws.provenance = std::move(prov);
  }

  static void validate(const WorkspaceFile& ws) {
    for (const auto& m : ws.maps)
      if (!is_even_matrix(ws.space, ws.space, m.mat))
        throw InvariantViolation("map '" + m.name + "' is not even");
    ws.map("alpha");
    ws.map("beta");
    const size_t expected = ws.metadata.variety == Variety::LDendriform ? 2 : 1;
    if (ws.metadata.product_names.size() != expected)
      throw InvariantViolation("metadata products line must name " + std::to_string(expected) +
                               " product(s) for variety " + variety_name(ws.metadata.variety));
    for (const auto& name : ws.metadata.product_names) ws.product(name);
    for (const auto& name : ws.metadata.weights) ws.map(name.first);
    std::vector<std::string> expected_actions;
    switch (ws.metadata.variety) {
    case Variety::Lie: expected_actions = {"rho"}; break;
    case Variety::LDendriform: expected_actions = {"l_succ", "r_succ", "l_prec", "r_prec"}; break;
    default: expected_actions = {"l", "r"}; break;
    }
    for (const auto& mod : ws.modules) {
      if (mod.actions.size() != expected_actions.size())
        throw InvariantViolation("module '" + mod.name + "' must carry actions " +
                                 [&] {
                                   std::string s;
                                   for (const auto& a : expected_actions) s += a + " ";
                                   return s;
                                 }());
      for (const auto& want : expected_actions) {
        const bool found = std::any_of(mod.actions.begin(), mod.actions.end(),
                                       [&](const auto& a) { return a.first == want; });
        if (!found)
          throw InvariantViolation("module '" + mod.name + "' is missing action '" + want + "'");
      }
      if (!is_even_matrix(mod.space, mod.space, mod.alphaV) ||
          !is_even_matrix(mod.space, mod.space, mod.betaV))
        throw InvariantViolation("module '" + mod.name + "' has a non-even structure map");
      for (const auto& m : mod.maps)
        if (!is_even_matrix(mod.space, mod.space, m.mat))
          throw InvariantViolation("module map '" + m.name + "' is not even");
      if (!is_zero(MatrixQ(mod.alphaV * mod.betaV - mod.betaV * mod.alphaV)))
        throw InvariantViolation("module '" + mod.name + "': alphaV and betaV do not commute");
      if (ws.metadata.variety == Variety::LDendriform && !mod.products.empty() &&
          mod.products.size() != 2)
        throw InvariantViolation("module '" + mod.name +
                                 "' must carry the module product pair (succ, prec)");
    }
    // building the structure runs the remaining shape and parity checks
    ws.structure();
  }
};

} // namespace

const BilinearOp& WorkspaceFile::product(std::string_view name) const {
  for (const auto& p : products)
    if (p.name == name) return p;
  throw UnknownName("unknown product '" + std::string(name) + "'");
}

const NamedMap& WorkspaceFile::map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return m;
  throw UnknownName("unknown map '" + std::string(name) + "'");
}

const ModuleBlock& WorkspaceFile::module_block(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return m;
  throw UnknownName("unknown module '" + std::string(name) + "'");
}

Structure WorkspaceFile::structure() const {
  std::vector<BilinearOp> prods;
  for (const auto& name : metadata.product_names) prods.push_back(product(name));
  return make_structure(metadata.variety, space, std::move(prods),
                        EvenMap{space, space, map("alpha").mat},
                        EvenMap{space, space, map("beta").mat});
}

Bimodule WorkspaceFile::bimodule(std::string_view module_name) const {
  const ModuleBlock& mod = module_block(module_name);
  Bimodule bm;
  bm.base = structure();
  bm.space = mod.space;
  bm.alphaV = EvenMap{mod.space, mod.space, mod.alphaV};
  bm.betaV = EvenMap{mod.space, mod.space, mod.betaV};
  std::vector<std::string> order;
  switch (metadata.variety) {
  case Variety::Lie: order = {"rho"}; break;
  case Variety::LDendriform: order = {"l_succ", "r_succ", "l_prec", "r_prec"}; break;
  default: order = {"l", "r"}; break;
  }
  for (const auto& want : order)
    for (const auto& [name, tensor] : mod.actions)
      if (name == want) bm.actions.push_back(Action{name, tensor});
  bm.products = mod.products;
  bm.validate();
  return bm;
}

OperatorSpec WorkspaceFile::make_operator(std::string_view map_name, OperatorKind kind,
                                          const SuperSpace& domain,
                                          std::optional<Rational> weight_override,
                                          std::optional<std::string> modification) const {
  OperatorSpec op;
  op.kind = kind;
  op.name = std::string(map_name);
  op.map = EvenMap{domain, space, map(map_name).mat};
  op.weight = weight_override ? *weight_override : weight_of(map_name);
  if (modification)
    op.modification = EvenMap{domain, space, map(*modification).mat};
  return op;
}

OperatorSpec WorkspaceFile::make_module_operator(std::string_view module_name,
                                                 std::string_view map_name, OperatorKind kind,
                                                 std::optional<Rational> weight_override) const {
  const ModuleBlock& mod = module_block(module_name);
  for (const auto& m : mod.maps)
    if (m.name == map_name) {
      OperatorSpec op;
      op.kind = kind;
      op.name = std::string(map_name);
      op.map = EvenMap{mod.space, mod.space, m.mat};
      op.weight = weight_override ? *weight_override : weight_of(map_name);
      return op;
    }
  throw UnknownName("unknown map '" + std::string(map_name) + "' in module '" +
                    std::string(module_name) + "'");
}

Rational WorkspaceFile::weight_of(std::string_view map_name) const {
  auto it = metadata.weights.find(std::string(map_name));
  return it == metadata.weights.end() ? Rational(0) : it->second;
}

WorkspaceFile parse_workspace(std::string_view text) { return Parser(text).run(); }

WorkspaceFile load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

namespace {

void write_space(std::ostringstream& os, const SuperSpace& sp, const std::string& indent) {
  std::string even, odd;
  for (Index i = 0; i < sp.dim(); ++i)
    (sp.parity_of(i) == 0 ? even : odd) += " " + sp.names[static_cast<size_t>(i)];
  os << indent << "space {\n";
  if (!even.empty()) os << indent << "  even" << even << "\n";
  if (!odd.empty()) os << indent << "  odd" << odd << "\n";
  os << indent << "}\n";
}

void write_product(std::ostringstream& os, const SuperSpace& sp, const BilinearOp& p,
                   const std::string& indent) {
  os << indent << "product " << p.name << " {\n";
  for (Index i = 0; i < sp.dim(); ++i)
    for (Index j = 0; j < sp.dim(); ++j)
      for (Index k = 0; k < sp.dim(); ++k)
        if (!p.coeff(i, j, k).is_zero())
          os << indent << "  " << sp.names[static_cast<size_t>(i)] << " "
             << sp.names[static_cast<size_t>(j)] << " " << sp.names[static_cast<size_t>(k)] << " "
             << to_string(p.coeff(i, j, k)) << "\n";
  os << indent << "}\n";
}

void write_map(std::ostringstream& os, const SuperSpace& domain, const SuperSpace& codomain,
               const std::string& name, const MatrixQ& m, const std::string& indent) {
  os << indent << "map " << name << " {\n";
  for (Index src = 0; src < domain.dim(); ++src)
    for (Index dst = 0; dst < codomain.dim(); ++dst)
      if (!m(dst, src).is_zero())
        os << indent << "  " << domain.names[static_cast<size_t>(src)] << " "
           << codomain.names[static_cast<size_t>(dst)] << " " << to_string(m(dst, src)) << "\n";
  os << indent << "}\n";
}

} // namespace

std::string serialize_workspace(const WorkspaceFile& ws) {
  std::ostringstream os;
  os << "version 1\n\n";
  write_space(os, ws.space, "");
  os << "\nmetadata {\n  variety " << variety_name(ws.metadata.variety) << "\n  products";
  for (const auto& name : ws.metadata.product_names) os << " " << name;
  os << "\n";
  for (const auto& [name, weight] : ws.metadata.weights)
    os << "  weight " << name << " " << to_string(weight) << "\n";
  os << "}\n";

  std::vector<const BilinearOp*> prods;
  for (const auto& p : ws.products) prods.push_back(&p);
  std::sort(prods.begin(), prods.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (const auto* p : prods) {
    os << "\n";
    write_product(os, ws.space, *p, "");
  }

  std::vector<const NamedMap*> maps;
  for (const auto& m : ws.maps) maps.push_back(&m);
  std::sort(maps.begin(), maps.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (const auto* m : maps) {
    os << "\n";
    write_map(os, ws.space, ws.space, m->name, m->mat, "");
  }

  std::vector<const ModuleBlock*> mods;
  for (const auto& m : ws.modules) mods.push_back(&m);
  std::sort(mods.begin(), mods.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (const auto* mod : mods) {
    os << "\nmodule " << mod->name << " {\n";
    write_space(os, mod->space, "  ");
    write_map(os, mod->space, mod->space, "alphaV", mod->alphaV, "  ");
    write_map(os, mod->space, mod->space, "betaV", mod->betaV, "  ");
    auto extra = mod->maps;
    std::sort(extra.begin(), extra.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const auto& m : extra) write_map(os, mod->space, mod->space, m.name, m.mat, "  ");
    auto actions = mod->actions;
    std::sort(actions.begin(), actions.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [name, tensor] : actions) {
      os << "  action " << name << " {\n";
      for (Index a = 0; a < ws.space.dim(); ++a)
        for (Index v = 0; v < mod->space.dim(); ++v)
          for (Index w = 0; w < mod->space.dim(); ++w)
            if (!tensor[static_cast<size_t>(a)](w, v).is_zero())
              os << "    " << ws.space.names[static_cast<size_t>(a)] << " "
                 << mod->space.names[static_cast<size_t>(v)] << " "
                 << mod->space.names[static_cast<size_t>(w)] << " "
                 << to_string(tensor[static_cast<size_t>(a)](w, v)) << "\n";
      os << "  }\n";
    }
    for (const auto& p : mod->products) write_product(os, mod->space, p, "  ");
    os << "}\n";
  }

  if (ws.provenance) {
    os << "\nprovenance {\n";
    if (!ws.provenance->recipe.empty()) os << "  recipe " << ws.provenance->recipe << "\n";
    if (!ws.provenance->source.empty()) os << "  source " << ws.provenance->source << "\n";
    if (!ws.provenance->verdict.empty()) os << "  verdict " << ws.provenance->verdict << "\n";
    os << "}\n";
  }
  return os.str();
}

WorkspaceFile workspace_of(const Structure& s, std::optional<Provenance> provenance) {
  WorkspaceFile ws;
  ws.space = s.space;
  ws.metadata.variety = s.variety;
  for (const auto& p : s.products) {
    ws.products.push_back(p);
    ws.metadata.product_names.push_back(p.name);
  }
  ws.maps.push_back(NamedMap{"alpha", s.alpha.mat});
  ws.maps.push_back(NamedMap{"beta", s.beta.mat});
  ws.provenance = std::move(provenance);
  return ws;
}

WorkspaceFile workspace_of(const Structure& s, const Bimodule& bm, const std::string& module_name,
                           std::optional<Provenance> provenance) {
  WorkspaceFile ws = workspace_of(s, std::move(provenance));
  ModuleBlock mod;
  mod.name = module_name;
  mod.space = bm.space;
  mod.alphaV = bm.alphaV.mat;
  mod.betaV = bm.betaV.mat;
  for (const auto& act : bm.actions) mod.actions.emplace_back(act.name, act.m);
  mod.products = bm.products;
  ws.modules.push_back(std::move(mod));
  return ws;
}

} // namespace bihom
