#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysoft/axioms.hpp"
#include "fuzzysoft/mapping.hpp"
#include "fuzzysoft/topology.hpp"

namespace fuzzysoft {

/// Identifier embedded in every report. The stream is std::mt19937_64 seeded
/// with the 64-bit seed; a draw in [0, n) is `next() % n`.
inline constexpr std::string_view kGeneratorId = "mt19937_64";

class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, n) by reduction modulo n; n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

enum class EnumMode { kExhaustive, kRandom };

/// Suite description shared by the miner and the theorem harness.
struct EnumConfig {
  std::size_t elements = 2;
  std::size_t parameters = 1;
  std::int64_t grid = 2;
  EnumMode mode = EnumMode::kExhaustive;
  /// Spaces drawn in random mode.
  std::size_t samples = 0;
  /// Required in random mode; the exhaustive suite still uses it for mapping draws.
  std::optional<std::uint64_t> seed;
  std::size_t subbasis_size = 3;
  /// Random injective mappings per q-T2 space in the pullback check.
  std::size_t mapping_samples = 50;
  /// Random (mapping, f, g) triples in the non-coincidence pullback check.
  std::size_t triple_samples = 1000;
  /// Read N(p) in the q-T0/q-T1 distinct-support clause at height 1.
  bool unit_height_nbds = false;

  /// Throws ConfigError when a bound or requirement is violated.
  void validate() const;
  std::uint64_t seed_or_default() const { return seed.value_or(0); }
  /// One-line description embedded in reports.
  std::string fingerprint() const;
};

/// Parses the JSON config format; errors are ParseError with a field locus.
EnumConfig parse_config(std::string_view text);
EnumConfig load_config(const std::filesystem::path& path);

/// Number of grid sets, (d+1)^(|E||X|); saturates at UINT64_MAX.
std::uint64_t grid_set_count(std::size_t elements, std::size_t parameters, std::int64_t grid);
inline constexpr std::uint64_t kExhaustiveSetBound = 16;

/// Every topology on the grid-set universe, once each. Candidates are the
/// subfamilies of the non-extreme grid sets, visited in increasing bitmask
/// order (bit i = i-th non-extreme set in canonical order).
std::vector<GradedSpace> enumerate_spaces(const EnumConfig& config);

/// Topology generated by `subbasis_size` grid sets drawn cell-wise uniform
/// from SeededStream(seed).
GradedSpace random_space(const UniversePtr& universe, const GradeGrid& grid, std::uint64_t seed,
                         std::size_t subbasis_size);

/// Exhaustive enumeration, or `samples` random spaces whose seeds are the
/// successive draws of SeededStream(config.seed).
std::vector<GradedSpace> build_suite(const EnumConfig& config);

/// Random grid set with cell-wise uniform grades.
FuzzySoftSet random_grid_set(SeededStream& rng, const UniversePtr& universe, const GradeGrid& grid);
/// Random u, p from a fresh universe of the given sizes into `target`.
FuzzySoftMapping random_mapping(SeededStream& rng, const UniversePtr& target, std::size_t source_elements,
                                std::size_t source_parameters);
/// Random injective u, p; source sizes drawn in [1, |Y|] x [1, |K|].
FuzzySoftMapping random_injective_mapping(SeededStream& rng, const UniversePtr& target);

/// A replayable instance file emitted for a failing finding.
struct Counterexample {
  std::string file_name;
  std::string text;
};

struct ImplicationEntry {
  Axiom antecedent;
  Axiom consequent;
  bool refuted = false;
  /// "asserted" for implications claimed by the theory, "definitional" for
  /// conjunction components, empty otherwise.
  std::string highlight;
  std::string witness_file;
};

struct ImplicationReport {
  std::string fingerprint;
  std::size_t space_count = 0;
  std::vector<ImplicationEntry> entries;
  std::vector<Counterexample> counterexamples;

  /// True when no asserted or definitional implication was refuted.
  bool highlighted_hold() const;
  std::string text() const;
};

/// Evaluates all 12 axioms on every space of the suite and reports, for each
/// ordered pair (A, B) with A != B, whether A => B survived.
ImplicationReport mine_implications(const EnumConfig& config);

struct TheoremFinding {
  std::string anchor;
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;
  std::string witness_file;
};

struct TheoremReport {
  std::string fingerprint;
  std::size_t space_count = 0;
  std::vector<TheoremFinding> findings;
  std::vector<Counterexample> counterexamples;

  bool all_pass() const;
  const TheoremFinding* find(std::string_view anchor) const;
  std::string text() const;
};

/// Stable anchors, in report order.
inline constexpr std::array<std::string_view, 16> kTheoremAnchors = {
    "algebra.quasi_coincidence_laws",
    "closure.operator_laws",
    "closure.qnbd_characterization",
    "chain.qT2_implies_qT1",
    "chain.qT1_implies_qT0",
    "bridge.qT0_implies_mdT0",
    "bridge.qT1_implies_mdT1",
    "bridge.qT2_implies_mdT2",
    "oracle.qT0_mutual_closure",
    "oracle.qT1_points_closed",
    "oracle.qT2_closure_meet",
    "oracle.qregular_refinement",
    "mapping.image_preimage_monotone",
    "mapping.preimage_keeps_nonq",
    "continuity.initial_topology",
    "pullback.injective_continuous_qT2",
};

/// Runs every theorem check over the suite.
TheoremReport verify_theorems(const EnumConfig& config);

/// The same open family viewed on a finer grid; throws GridIncompatible unless
/// `denominator` is a multiple of the space's.
GradedSpace refine_grid(const GradedSpace& space, std::int64_t denominator);

/// Writes each counterexample into `dir` (created if needed).
void write_counterexamples(const std::vector<Counterexample>& counterexamples, const std::filesystem::path& dir);

}  // namespace fuzzysoft
