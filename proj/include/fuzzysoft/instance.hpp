#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzysoft/grade.hpp"
#include "fuzzysoft/mapping.hpp"
#include "fuzzysoft/soft_set.hpp"
#include "fuzzysoft/topology.hpp"

namespace fuzzysoft {

inline constexpr std::string_view kInstanceFormat = "fuzzysoft-instance/1";

/// A topology member: the name of a declared set ("null" and "universal" are
/// reserved) or an inline grade matrix.
using SetRef = std::variant<std::string, FuzzySoftSet>;

struct TopologySpec {
  enum class Kind { kOpens, kGenerateFrom };
  Kind kind = Kind::kOpens;
  std::vector<SetRef> members;

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

struct InstanceFile;

/// A mapping into another instance, given as a path (relative to the file
/// declaring the mapping) or inline.
struct MappingSpec {
  std::variant<std::string, std::shared_ptr<const InstanceFile>> target;
  std::map<std::string, std::string> elements;    // u: X -> Y
  std::map<std::string, std::string> parameters;  // p: E -> K

  friend bool operator==(const MappingSpec& a, const MappingSpec& b);
};

struct InstanceFile {
  UniversePtr universe;
  GradeGrid grid;
  std::map<std::string, FuzzySoftSet> sets;
  TopologySpec topology;
  std::map<std::string, MappingSpec> mappings;

  friend bool operator==(const InstanceFile& a, const InstanceFile& b);
};

struct ParseOptions {
  /// When false, an explicit opens list is accepted even if it is not a
  /// topology (the `verify` command reports the violation itself).
  bool validate_topology = true;
};

/// Parses the JSON instance format. Every failure is a ParseError whose locus
/// is "line N" for syntax errors or a JSON pointer for semantic ones.
InstanceFile parse_instance(std::string_view text, const ParseOptions& options = {});

/// Canonical text: two-space indented JSON, keys sorted, grades in lowest
/// terms, trailing LF.
std::string serialize_instance(const InstanceFile& instance);

InstanceFile load_instance(const std::filesystem::path& path, const ParseOptions& options = {});

FuzzySoftSet resolve_set(const InstanceFile& instance, const SetRef& ref);
/// The resolved topology members in file order (unvalidated for generate_from subbases).
std::vector<FuzzySoftSet> resolve_members(const InstanceFile& instance);

/// Builds the space; generate_from members are closed into a topology first.
GradedSpace build_space(const InstanceFile& instance);

/// An instance whose topology lists every open inline.
InstanceFile instance_from_space(const GradedSpace& space);

struct ResolvedMapping {
  FuzzySoftMapping mapping;
  GradedSpace target;
};

/// Loads the mapping's target (relative paths resolve against `base_dir`) and
/// checks that both tables are total and land in the target universe.
ResolvedMapping resolve_mapping(const InstanceFile& instance, const std::string& name,
                                const std::filesystem::path& base_dir);

}  // namespace fuzzysoft
