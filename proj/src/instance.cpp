#include "fuzzysoft/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fuzzysoft/errors.hpp"
#include "json.hpp"

namespace fuzzysoft {

namespace {

using json = nlohmann::json;

constexpr std::string_view kNull = "null";
constexpr std::string_view kUniversal = "universal";

std::string line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
  return "line " + std::to_string(line);
}

// Escapes '~' and '/' in names as JSON pointers require.
std::string child(const std::string& path, const std::string& key) {
  return (json::json_pointer(path) / key).to_string();
}
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> known) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError(child(path, key), "unknown field");
    }
  }
}

std::vector<std::string> parse_names(const json& node, const std::string& path) {
  if (!node.is_array()) throw ParseError(path, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string()) throw ParseError(child(path, i), "expected a name string");
    out.push_back(node[i].get<std::string>());
  }
  return out;
}

Grade parse_grade(const json& node, const std::string& path, const GradeGrid& grid) {
  if (!node.is_string()) throw ParseError(path, "grade must be a \"k/d\" string");
  Grade g;
  try {
    g = Grade::parse(node.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
  if (!grid.contains(g)) {
    throw ParseError(path, "grade " + g.str() + " is off the grid of denominator " +
                               std::to_string(grid.denominator()));
  }
  return g;
}

FuzzySoftSet parse_matrix(const json& node, const std::string& path, const UniversePtr& universe,
                          const GradeGrid& grid) {
  if (!node.is_array() || node.size() != universe->parameter_count()) {
    throw ParseError(path, "expected " + std::to_string(universe->parameter_count()) +
                               " rows (one per parameter)");
  }
  std::vector<Grade> grades;
  grades.reserve(universe->cell_count());
  for (std::size_t e = 0; e < node.size(); ++e) {
    const auto row_path = child(path, e);
    const json& row = node[e];
    if (!row.is_array() || row.size() != universe->element_count()) {
      throw ParseError(row_path, "expected " + std::to_string(universe->element_count()) +
                                     " grades (one per element)");
    }
    for (std::size_t x = 0; x < row.size(); ++x) grades.push_back(parse_grade(row[x], child(row_path, x), grid));
  }
  return FuzzySoftSet(universe, std::move(grades));
}

json matrix_json(const FuzzySoftSet& f) {
  json rows = json::array();
  const auto& u = *f.universe();
  for (std::size_t e = 0; e < u.parameter_count(); ++e) {
    json row = json::array();
    for (std::size_t x = 0; x < u.element_count(); ++x) row.push_back(f.at(e, x).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::map<std::string, std::string> parse_table(const json& node, const std::string& path,
                                               const std::vector<std::string>& domain) {
  if (!node.is_object()) throw ParseError(path, "expected a name -> name table");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : node.items()) {
    if (std::find(domain.begin(), domain.end(), key) == domain.end()) {
      throw ParseError(child(path, key), "\"" + key + "\" is not in the source universe");
    }
    if (!value.is_string()) throw ParseError(child(path, key), "expected a target name");
    out.emplace(key, value.get<std::string>());
  }
  for (const auto& name : domain) {
    if (!out.count(name)) throw ParseError(path, "table is not total: \"" + name + "\" has no image");
  }
  return out;
}

std::vector<std::size_t> table_indices(const std::map<std::string, std::string>& table,
                                       const std::vector<std::string>& domain,
                                       const std::vector<std::string>& codomain, const std::string& path) {
  std::vector<std::size_t> out;
  for (const auto& name : domain) {
    const auto& image = table.at(name);
    auto it = std::find(codomain.begin(), codomain.end(), image);
    if (it == codomain.end()) {
      throw ParseError(child(path, name), "\"" + image + "\" is not in the target universe");
    }
    out.push_back(static_cast<std::size_t>(it - codomain.begin()));
  }
  return out;
}

InstanceFile parse_json(const json& root, const std::string& path, const ParseOptions& options);

void check_mapping_tables(const MappingSpec& spec, const Universe& source, const Universe& target,
                          const std::string& path) {
  table_indices(spec.elements, source.elements(), target.elements(), child(path, "u"));
  table_indices(spec.parameters, source.parameters(), target.parameters(), child(path, "p"));
}

MappingSpec parse_mapping(const json& node, const std::string& path, const Universe& source,
                          const ParseOptions& options) {
  if (!node.is_object()) throw ParseError(path, "mapping must be an object");
  reject_unknown(node, path, {"target", "u", "p"});
  MappingSpec spec;
  const json& target = require(node, path, "target");
  if (target.is_string()) {
    spec.target = target.get<std::string>();
  } else if (target.is_object()) {
    spec.target = std::make_shared<const InstanceFile>(parse_json(target, child(path, "target"), options));
  } else {
    throw ParseError(child(path, "target"), "target must be a path string or an inline instance");
  }
  spec.elements = parse_table(require(node, path, "u"), child(path, "u"), source.elements());
  spec.parameters = parse_table(require(node, path, "p"), child(path, "p"), source.parameters());
  if (auto* inline_target = std::get_if<std::shared_ptr<const InstanceFile>>(&spec.target)) {
    check_mapping_tables(spec, source, *(*inline_target)->universe, path);
  }
  return spec;
}

InstanceFile parse_json(const json& root, const std::string& path, const ParseOptions& options) {
  if (!root.is_object()) throw ParseError(path.empty() ? "/" : path, "instance must be a JSON object");
  reject_unknown(root, path, {"format", "grid", "universe", "sets", "topology", "mappings"});

  const json& format = require(root, path, "format");
  if (!format.is_string() || format.get<std::string>() != kInstanceFormat) {
    throw ParseError(child(path, "format"), "expected \"" + std::string(kInstanceFormat) + "\"");
  }

  const json& grid_node = require(root, path, "grid");
  if (!grid_node.is_number_integer()) throw ParseError(child(path, "grid"), "grid must be an integer");
  std::optional<GradeGrid> grid;
  try {
    grid.emplace(grid_node.get<std::int64_t>());
  } catch (const Error& e) {
    throw ParseError(child(path, "grid"), e.what());
  }

  const auto upath = child(path, "universe");
  const json& unode = require(root, path, "universe");
  if (!unode.is_object()) throw ParseError(upath, "universe must be an object");
  reject_unknown(unode, upath, {"elements", "parameters"});
  UniversePtr universe;
  try {
    universe = make_universe(parse_names(require(unode, upath, "elements"), child(upath, "elements")),
                             parse_names(require(unode, upath, "parameters"), child(upath, "parameters")));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(upath, e.what());
  }

  InstanceFile inst{universe, *grid, {}, {}, {}};

  if (auto it = root.find("sets"); it != root.end()) {
    const auto spath = child(path, "sets");
    if (!it->is_object()) throw ParseError(spath, "sets must be an object");
    for (const auto& [name, matrix] : it->items()) {
      if (name == kNull || name == kUniversal || name.empty()) {
        throw ParseError(child(spath, name), "reserved or empty set name \"" + name + "\"");
      }
      inst.sets.emplace(name, parse_matrix(matrix, child(spath, name), universe, *grid));
    }
  }

  const auto tpath = child(path, "topology");
  const json& tnode = require(root, path, "topology");
  if (!tnode.is_object() || tnode.size() != 1) {
    throw ParseError(tpath, "topology must hold exactly one of \"opens\" or \"generate_from\"");
  }
  reject_unknown(tnode, tpath, {"opens", "generate_from"});
  const bool generate = tnode.contains("generate_from");
  inst.topology.kind = generate ? TopologySpec::Kind::kGenerateFrom : TopologySpec::Kind::kOpens;
  const auto mpath = child(tpath, generate ? "generate_from" : "opens");
  const json& members = tnode.begin().value();
  if (!members.is_array()) throw ParseError(mpath, "expected an array of set names or matrices");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const json& m = members[i];
    if (m.is_string()) {
      const auto name = m.get<std::string>();
      if (name != kNull && name != kUniversal && !inst.sets.count(name)) {
        throw ParseError(child(mpath, i), "unresolved set reference \"" + name + "\"");
      }
      inst.topology.members.emplace_back(name);
    } else {
      inst.topology.members.emplace_back(parse_matrix(m, child(mpath, i), universe, *grid));
    }
  }
  if (!generate && options.validate_topology) {
    auto family = resolve_members(inst);
    auto verdict = verify_topology(family, *grid);
    if (!verdict.ok()) {
      const auto& v = *verdict.violation;
      std::string where = mpath;
      if (v.first) where = child(mpath, *v.first);
      throw ParseError(where, "topology violates " + v.axiom() + ": " + v.message);
    }
  }

  if (auto it = root.find("mappings"); it != root.end()) {
    const auto ppath = child(path, "mappings");
    if (!it->is_object()) throw ParseError(ppath, "mappings must be an object");
    for (const auto& [name, node] : it->items()) {
      inst.mappings.emplace(name, parse_mapping(node, child(ppath, name), *universe, options));
    }
  }
  return inst;
}

json to_json(const InstanceFile& inst) {
  json root = json::object();
  root["format"] = kInstanceFormat;
  root["grid"] = inst.grid.denominator();
  root["universe"] = {{"elements", inst.universe->elements()}, {"parameters", inst.universe->parameters()}};
  if (!inst.sets.empty()) {
    json sets = json::object();
    for (const auto& [name, f] : inst.sets) sets[name] = matrix_json(f);
    root["sets"] = std::move(sets);
  }
  json members = json::array();
  for (const auto& m : inst.topology.members) {
    if (const auto* name = std::get_if<std::string>(&m)) {
      members.push_back(*name);
    } else {
      members.push_back(matrix_json(std::get<FuzzySoftSet>(m)));
    }
  }
  const char* key = inst.topology.kind == TopologySpec::Kind::kOpens ? "opens" : "generate_from";
  root["topology"] = {{key, std::move(members)}};
  if (!inst.mappings.empty()) {
    json maps = json::object();
    for (const auto& [name, spec] : inst.mappings) {
      json m = json::object();
      if (const auto* p = std::get_if<std::string>(&spec.target)) {
        m["target"] = *p;
      } else {
        m["target"] = to_json(*std::get<std::shared_ptr<const InstanceFile>>(spec.target));
      }
      m["u"] = spec.elements;
      m["p"] = spec.parameters;
      maps[name] = std::move(m);
    }
    root["mappings"] = std::move(maps);
  }
  return root;
}

}  // namespace

bool operator==(const MappingSpec& a, const MappingSpec& b) {
  if (a.elements != b.elements || a.parameters != b.parameters) return false;
  if (a.target.index() != b.target.index()) return false;
  if (const auto* p = std::get_if<std::string>(&a.target)) return *p == std::get<std::string>(b.target);
  const auto& x = std::get<std::shared_ptr<const InstanceFile>>(a.target);
  const auto& y = std::get<std::shared_ptr<const InstanceFile>>(b.target);
  return *x == *y;
}

bool operator==(const InstanceFile& a, const InstanceFile& b) {
  return *a.universe == *b.universe && a.grid == b.grid && a.sets == b.sets && a.topology == b.topology &&
         a.mappings == b.mappings;
}

InstanceFile parse_instance(std::string_view text, const ParseOptions& options) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  return parse_json(root, "", options);
}

std::string serialize_instance(const InstanceFile& instance) { return to_json(instance).dump(2) + "\n"; }

InstanceFile load_instance(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str(), options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ":" + e.locus(), e.message());
  }
}

FuzzySoftSet resolve_set(const InstanceFile& instance, const SetRef& ref) {
  if (const auto* f = std::get_if<FuzzySoftSet>(&ref)) return *f;
  const auto& name = std::get<std::string>(ref);
  if (name == kNull) return null_set(instance.universe);
  if (name == kUniversal) return universal_set(instance.universe);
  auto it = instance.sets.find(name);
  if (it == instance.sets.end()) throw ParseError("/sets", "unresolved set reference \"" + name + "\"");
  return it->second;
}

std::vector<FuzzySoftSet> resolve_members(const InstanceFile& instance) {
  std::vector<FuzzySoftSet> out;
  out.reserve(instance.topology.members.size());
  for (const auto& m : instance.topology.members) out.push_back(resolve_set(instance, m));
  return out;
}

GradedSpace build_space(const InstanceFile& instance) {
  auto members = resolve_members(instance);
  if (instance.topology.kind == TopologySpec::Kind::kGenerateFrom) {
    return GradedSpace(generate_topology(members, instance.universe, instance.grid));
  }
  return GradedSpace(FuzzySoftTopology(instance.universe, instance.grid, std::move(members)));
}

InstanceFile instance_from_space(const GradedSpace& space) {
  InstanceFile inst{space.universe(), space.grid(), {}, {}, {}};
  inst.topology.kind = TopologySpec::Kind::kOpens;
  for (const auto& f : space.opens()) inst.topology.members.emplace_back(f);
  return inst;
}

ResolvedMapping resolve_mapping(const InstanceFile& instance, const std::string& name,
                                const std::filesystem::path& base_dir) {
  auto it = instance.mappings.find(name);
  if (it == instance.mappings.end()) throw ParseError("/mappings", "no mapping named \"" + name + "\"");
  const MappingSpec& spec = it->second;
  std::shared_ptr<const InstanceFile> target;
  if (const auto* p = std::get_if<std::string>(&spec.target)) {
    std::filesystem::path tp(*p);
    if (tp.is_relative()) tp = base_dir / tp;
    target = std::make_shared<const InstanceFile>(load_instance(tp));
  } else {
    target = std::get<std::shared_ptr<const InstanceFile>>(spec.target);
  }
  const auto path = "/mappings/" + name;
  auto u = table_indices(spec.elements, instance.universe->elements(), target->universe->elements(),
                         child(path, "u"));
  auto p = table_indices(spec.parameters, instance.universe->parameters(), target->universe->parameters(),
                         child(path, "p"));
  return {FuzzySoftMapping(instance.universe, target->universe, std::move(u), std::move(p)), build_space(*target)};
}

}  // namespace fuzzysoft
