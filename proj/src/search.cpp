#include "fuzzysoft/search.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "fuzzysoft/errors.hpp"
#include "fuzzysoft/instance.hpp"
#include "json.hpp"

namespace fuzzysoft {

namespace {

using json = nlohmann::json;

constexpr std::size_t kMaxUniverseSide = 8;

const char* mode_name(EnumMode mode) { return mode == EnumMode::kExhaustive ? "exhaustive" : "random"; }

std::size_t read_count(const json& root, const char* key, std::size_t fallback) {
  auto it = root.find(key);
  if (it == root.end()) return fallback;
  if (!it->is_number_unsigned()) throw ParseError(std::string("/") + key, "expected a non-negative integer");
  return it->get<std::size_t>();
}

UniversePtr config_universe(const EnumConfig& config) {
  return make_indexed_universe(config.elements, config.parameters);
}

// ---- report plumbing -------------------------------------------------------

std::string counterexample_text(const GradedSpace& space) { return serialize_instance(instance_from_space(space)); }

/// Source instance carrying `m` into an inline target; replayable via the
/// `continuous` and `check` commands.
std::string mapping_counterexample_text(const GradedSpace& source, const FuzzySoftMapping& m,
                                        const InstanceFile& target) {
  InstanceFile inst = instance_from_space(source);
  MappingSpec spec;
  spec.target = std::make_shared<const InstanceFile>(target);
  for (std::size_t x = 0; x < m.source()->element_count(); ++x) {
    spec.elements.emplace(m.source()->elements()[x], m.target()->elements()[m.element_map()[x]]);
  }
  for (std::size_t e = 0; e < m.source()->parameter_count(); ++e) {
    spec.parameters.emplace(m.source()->parameters()[e], m.target()->parameters()[m.parameter_map()[e]]);
  }
  inst.mappings.emplace("m", std::move(spec));
  return serialize_instance(inst);
}

/// Collects pass/fail per anchor, keeping only the first counterexample.
class FindingBuilder {
 public:
  explicit FindingBuilder(std::string_view anchor) { finding_.anchor = anchor; }

  void count(std::size_t n = 1) { finding_.checked += n; }

  void fail(const std::string& detail, std::string counterexample_text) {
    ++failures_;
    if (!finding_.pass) return;
    finding_.pass = false;
    finding_.detail = detail;
    if (!counterexample_text.empty()) {
      finding_.witness_file = finding_.anchor + ".inst";
      counterexample_ = Counterexample{finding_.witness_file, std::move(counterexample_text)};
    }
  }

  void finish(TheoremReport& report, const std::string& note = {}) {
    if (failures_ > 0) finding_.detail = "failures=" + std::to_string(failures_) + note + " first: " + finding_.detail;
    report.findings.push_back(std::move(finding_));
    if (counterexample_) report.counterexamples.push_back(std::move(*counterexample_));
  }

 private:
  TheoremFinding finding_;
  std::size_t failures_ = 0;
  std::optional<Counterexample> counterexample_;
};

// ---- algebra ---------------------------------------------------------------

/// Name of the first failing law for (f, g, h), or empty.
std::string algebra_violation(const FuzzySoftSet& f, const FuzzySoftSet& g, const FuzzySoftSet& h,
                              const GradeGrid& grid) {
  const auto& u = f.universe();
  const auto zero = null_set(u);
  const auto one = universal_set(u);
  if (!(unite(f, g) == unite(g, f)) || !(intersect(f, g) == intersect(g, f))) return "commutativity";
  if (!(unite(unite(f, g), h) == unite(f, unite(g, h)))) return "join associativity";
  if (!(intersect(intersect(f, g), h) == intersect(f, intersect(g, h)))) return "meet associativity";
  if (!(unite(f, f) == f) || !(intersect(f, f) == f)) return "idempotence";
  if (!(unite(f, intersect(f, g)) == f) || !(intersect(f, unite(f, g)) == f)) return "absorption";
  if (!(unite(f, zero) == f) || !(intersect(f, one) == f) || !subset(zero, f) || !subset(f, one)) {
    return "bounds";
  }
  if (!(complement(unite(f, g)) == intersect(complement(f), complement(g))) ||
      !(complement(intersect(f, g)) == unite(complement(f), complement(g)))) {
    return "de morgan";
  }
  if (!(complement(complement(f)) == f)) return "involution";
  if (subset(f, g) != !quasi_coincident(f, complement(g))) return "P-c(1)";
  if (quasi_coincident(f, g) && intersect(f, g).is_null()) return "P-c(2)";
  if (quasi_coincident(f, complement(f))) return "P-c(3)";
  const auto points = all_grid_points(u, grid);
  bool witness4 = false;
  bool implication6 = true;
  for (const auto& p : points) {
    if (point_belongs(p, f) && quasi_coincident(p, g)) witness4 = true;
    if (!quasi_coincident(p, f) != point_belongs(p, complement(f))) return "P-c(5)";
    if (quasi_coincident(p, f) && !quasi_coincident(p, g)) implication6 = false;
  }
  if (quasi_coincident(f, g) != witness4) return "P-c(4)";
  if (subset(f, g) != implication6) return "P-c(6)";
  return {};
}

void check_algebra(const EnumConfig& config, SeededStream& rng, TheoremReport& report) {
  FindingBuilder b(kTheoremAnchors[0]);
  const auto u = config_universe(config);
  const GradeGrid grid(config.grid);
  auto record = [&](const FuzzySoftSet& f, const FuzzySoftSet& g, const FuzzySoftSet& h) {
    b.count();
    if (auto law = algebra_violation(f, g, h, grid); !law.empty()) {
      b.fail(law + " on f=" + f.str() + " g=" + g.str() + " h=" + h.str(), "");
    }
  };
  if (grid_set_count(config.elements, config.parameters, config.grid) <= 16) {
    const auto sets = all_grid_sets(u, grid);
    for (const auto& f : sets) {
      for (const auto& g : sets) {
        for (const auto& h : sets) record(f, g, h);
      }
    }
  } else {
    for (std::size_t i = 0; i < config.triple_samples; ++i) {
      auto f = random_grid_set(rng, u, grid);
      auto g = random_grid_set(rng, u, grid);
      auto h = random_grid_set(rng, u, grid);
      record(f, g, h);
    }
  }
  b.finish(report);
}

/// Grid sets exercised per space: all of them when few, else a seeded sample.
std::vector<FuzzySoftSet> probe_sets(const GradedSpace& space, SeededStream& rng) {
  constexpr std::size_t kSample = 32;
  const auto total = grid_set_count(space.universe()->element_count(), space.universe()->parameter_count(),
                                    space.grid().denominator());
  if (total <= 256) return all_grid_sets(space.universe(), space.grid());
  std::vector<FuzzySoftSet> out;
  for (std::size_t i = 0; i < kSample; ++i) out.push_back(random_grid_set(rng, space.universe(), space.grid()));
  return out;
}

std::string closure_law_violation(const GradedSpace& space, const FuzzySoftSet& f, const FuzzySoftSet& g) {
  const auto cf = closure(space, f);
  if (!subset(f, cf)) return "extensive";
  if (!(closure(space, cf) == cf)) return "idempotent";
  if (!is_closed(space, cf)) return "closed";
  if (subset(f, g) && !subset(cf, closure(space, g))) return "monotone";
  return {};
}

void check_closure(const std::vector<GradedSpace>& suite, SeededStream& rng, TheoremReport& report) {
  FindingBuilder laws(kTheoremAnchors[1]);
  FindingBuilder tcl(kTheoremAnchors[2]);
  for (const auto& space : suite) {
    const auto sets = probe_sets(space, rng);
    const auto zero = null_set(space.universe());
    const auto one = universal_set(space.universe());
    laws.count();
    if (!(closure(space, zero) == zero) || !(closure(space, one) == one)) {
      laws.fail("closure of an extreme moved", counterexample_text(space));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& f = sets[i];
      const auto& g = sets[(i * 7 + 3) % sets.size()];
      laws.count();
      if (auto law = closure_law_violation(space, f, g); !law.empty()) {
        laws.fail(law + " on f=" + f.str(), counterexample_text(space));
      }
      const auto cf = closure(space, f);
      for (const auto& p : space.points()) {
        tcl.count();
        if (in_closure_via_qnbd(space, p, f) != point_belongs(p, cf)) {
          tcl.fail("p=" + p.str() + " f=" + f.str(), counterexample_text(space));
        }
      }
    }
  }
  laws.finish(report);
  tcl.finish(report);
}

void check_implications(const std::vector<GradedSpace>& suite, const CheckOptions& options,
                        TheoremReport& report) {
  struct Rule {
    std::string_view anchor;
    std::function<Verdict(const GradedSpace&)> lhs;
    std::function<Verdict(const GradedSpace&)> rhs;
  };
  const std::vector<Rule> rules = {
      {kTheoremAnchors[3], [](const auto& s) { return check_q_t2(s); },
       [&](const auto& s) { return check_q_t1(s, options); }},
      {kTheoremAnchors[4], [&](const auto& s) { return check_q_t1(s, options); },
       [&](const auto& s) { return check_q_t0(s, options); }},
      {kTheoremAnchors[5], [&](const auto& s) { return check_q_t0(s, options); },
       [](const auto& s) { return check_md(s, Axiom::kMdT0); }},
      {kTheoremAnchors[6], [&](const auto& s) { return check_q_t1(s, options); },
       [](const auto& s) { return check_md(s, Axiom::kMdT1); }},
      {kTheoremAnchors[7], [](const auto& s) { return check_q_t2(s); },
       [](const auto& s) { return check_md(s, Axiom::kMdT2); }},
  };
  for (const auto& rule : rules) {
    FindingBuilder b(rule.anchor);
    for (const auto& space : suite) {
      b.count();
      if (!rule.lhs(space).holds) continue;
      auto rhs = rule.rhs(space);
      if (!rhs.holds) b.fail(rhs.witness->describe(), counterexample_text(space));
    }
    b.finish(report);
  }
}

void check_oracles(const std::vector<GradedSpace>& suite, const CheckOptions& options, TheoremReport& report) {
  struct Pair {
    std::string_view anchor;
    std::function<Verdict(const GradedSpace&)> checker;
    std::function<Verdict(const GradedSpace&)> oracle;
  };
  const std::vector<Pair> pairs = {
      {kTheoremAnchors[8], [&](const auto& s) { return check_q_t0(s, options); }, oracle_q_t0_closure},
      {kTheoremAnchors[9], [&](const auto& s) { return check_q_t1(s, options); }, oracle_q_t1_points_closed},
      {kTheoremAnchors[10], check_q_t2, oracle_q_t2_closure_meet},
      {kTheoremAnchors[11], check_q_regular, oracle_q_regular_refinement},
  };
  for (const auto& pair : pairs) {
    FindingBuilder b(pair.anchor);
    // Disagreements that vanish on the doubled grid are artefacts of coarse grades.
    std::size_t persisting = 0;
    std::int64_t refined_d = 0;
    for (const auto& space : suite) {
      b.count();
      auto lhs = pair.checker(space);
      auto rhs = pair.oracle(space);
      if (lhs.holds == rhs.holds) continue;
      const auto fine = refine_grid(space, 2 * space.grid().denominator());
      refined_d = fine.grid().denominator();
      if (pair.checker(fine).holds != pair.oracle(fine).holds) ++persisting;
      const auto& w = lhs.holds ? *rhs.witness : *lhs.witness;
      b.fail(std::string(lhs.holds ? "checker holds, oracle fails: " : "checker fails, oracle holds: ") +
                 w.describe(),
             counterexample_text(space));
    }
    b.finish(report, refined_d == 0 ? std::string()
                                    : " persisting_at_d=" + std::to_string(refined_d) + ":" +
                                          std::to_string(persisting));
  }
}

std::string mapping_violation(const FuzzySoftMapping& m, const FuzzySoftSet& f1, const FuzzySoftSet& f2,
                              const FuzzySoftSet& g1, const FuzzySoftSet& g2) {
  const auto lo = intersect(f1, f2);
  const auto hi = unite(f1, f2);
  if (!subset(image(m, lo), image(m, hi))) return "image monotone";
  if (!subset(preimage(m, intersect(g1, g2)), preimage(m, unite(g1, g2)))) return "preimage monotone";
  if (!(preimage(m, unite(g1, g2)) == unite(preimage(m, g1), preimage(m, g2)))) return "preimage join";
  if (!(preimage(m, intersect(g1, g2)) == intersect(preimage(m, g1), preimage(m, g2)))) return "preimage meet";
  if (!(preimage(m, complement(g1)) == complement(preimage(m, g1)))) return "preimage complement";
  if (!subset(f1, preimage(m, image(m, f1)))) return "f below preimage(image(f))";
  if (m.surjective() && !subset(image(m, preimage(m, g1)), g1)) return "image(preimage(g)) below g";
  return {};
}

void check_mappings(const EnumConfig& config, SeededStream& rng, TheoremReport& report) {
  FindingBuilder mono(kTheoremAnchors[12]);
  FindingBuilder nonq(kTheoremAnchors[13]);
  const auto target = config_universe(config);
  const GradeGrid grid(config.grid);
  for (std::size_t i = 0; i < config.triple_samples; ++i) {
    auto m = random_mapping(rng, target, 1 + rng.below(3), 1 + rng.below(2));
    auto f1 = random_grid_set(rng, m.source(), grid);
    auto f2 = random_grid_set(rng, m.source(), grid);
    auto g1 = random_grid_set(rng, target, grid);
    auto g2 = random_grid_set(rng, target, grid);
    mono.count();
    if (auto law = mapping_violation(m, f1, f2, g1, g2); !law.empty()) mono.fail(law, "");

    // g is drawn cell-wise below the complement of f, so f and g never coincide.
    auto f = random_grid_set(rng, target, grid);
    std::vector<Grade> cells;
    for (const auto& a : f.grades()) {
      const auto room = static_cast<std::uint64_t>(grid.index_of(a.complement()));
      cells.push_back(grid.at(static_cast<std::int64_t>(rng.below(room + 1))));
    }
    FuzzySoftSet g(target, std::move(cells));
    nonq.count();
    if (quasi_coincident(f, g)) {
      nonq.fail("generator produced coincident pair", "");
    } else if (preimage_preserves_nonq(m, f, g)) {
      InstanceFile tgt{target, grid, {{"f", f}, {"g", g}}, {}, {}};
      tgt.topology.members = {std::string("null"), std::string("universal")};
      nonq.fail("f=" + f.str() + " g=" + g.str(),
                mapping_counterexample_text(GradedSpace(indiscrete_topology(m.source(), grid)), m, tgt));
    }
  }
  mono.finish(report);
  nonq.finish(report);
}

void check_pullbacks(const std::vector<GradedSpace>& suite, const EnumConfig& config, SeededStream& rng,
                     TheoremReport& report) {
  FindingBuilder cont(kTheoremAnchors[14]);
  FindingBuilder pull(kTheoremAnchors[15]);
  for (const auto& target : suite) {
    for (std::size_t i = 0; i < 3; ++i) {
      auto m = random_mapping(rng, target.universe(), 1 + rng.below(3), 1 + rng.below(2));
      GradedSpace source(initial_topology(m, target));
      cont.count();
      if (!is_continuous(m, source, target).holds) {
        cont.fail("initial topology leaves m discontinuous",
                  mapping_counterexample_text(source, m, instance_from_space(target)));
      }
    }
    if (!check_q_t2(target).holds) continue;
    std::vector<FuzzySoftMapping> maps{FuzzySoftMapping::identity(target.universe())};
    for (std::size_t i = 0; i < config.mapping_samples; ++i) maps.push_back(random_injective_mapping(rng, target.universe()));
    for (const auto& m : maps) {
      GradedSpace source(initial_topology(m, target));
      pull.count();
      auto verdict = check_q_t2(source);
      if (!verdict.holds) {
        pull.fail(verdict.witness->describe(), mapping_counterexample_text(source, m, instance_from_space(target)));
      }
    }
  }
  cont.finish(report);
  pull.finish(report);
}

}  // namespace

void EnumConfig::validate() const {
  if (elements == 0 || parameters == 0) throw ConfigError("universe sizes must be positive");
  if (elements > kMaxUniverseSide || parameters > kMaxUniverseSide) {
    throw ConfigError("universe sides are limited to " + std::to_string(kMaxUniverseSide));
  }
  GradeGrid{grid};
  if (mode == EnumMode::kExhaustive) {
    const auto count = grid_set_count(elements, parameters, grid);
    if (count > kExhaustiveSetBound) {
      throw ConfigError("exhaustive enumeration needs (d+1)^(|E||X|) <= 16, got " +
                        (count == UINT64_MAX ? std::string("overflow") : std::to_string(count)));
    }
  } else if (!seed) {
    throw ConfigError("random mode requires a seed");
  }
}

std::string EnumConfig::fingerprint() const {
  std::ostringstream out;
  out << "mode=" << mode_name(mode) << " elements=" << elements << " parameters=" << parameters
      << " grid=" << grid << " samples=" << samples << " seed=" << seed_or_default()
      << " subbasis=" << subbasis_size << " mappings=" << mapping_samples << " triples=" << triple_samples
      << " nbd=" << (unit_height_nbds ? "unit" : "own") << " generator=" << kGeneratorId;
  return out.str();
}

EnumConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!root.is_object()) throw ParseError("/", "config must be a JSON object");
  static const std::vector<std::string> known = {"elements",        "parameters",     "grid",
                                                 "mode",            "samples",        "seed",
                                                 "subbasis_size",   "mapping_samples", "triple_samples",
                                                 "unit_height_nbds"};
  for (const auto& [key, _] : root.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError("/" + key, "unknown field");
    }
  }
  EnumConfig c;
  c.elements = read_count(root, "elements", c.elements);
  c.parameters = read_count(root, "parameters", c.parameters);
  c.grid = static_cast<std::int64_t>(read_count(root, "grid", static_cast<std::size_t>(c.grid)));
  if (auto it = root.find("mode"); it != root.end()) {
    if (*it == "exhaustive") {
      c.mode = EnumMode::kExhaustive;
    } else if (*it == "random") {
      c.mode = EnumMode::kRandom;
    } else {
      throw ParseError("/mode", "expected \"exhaustive\" or \"random\"");
    }
  }
  c.samples = read_count(root, "samples", c.samples);
  if (auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_unsigned()) throw ParseError("/seed", "expected a non-negative integer");
    c.seed = it->get<std::uint64_t>();
  }
  c.subbasis_size = read_count(root, "subbasis_size", c.subbasis_size);
  c.mapping_samples = read_count(root, "mapping_samples", c.mapping_samples);
  c.triple_samples = read_count(root, "triple_samples", c.triple_samples);
  if (auto it = root.find("unit_height_nbds"); it != root.end()) {
    if (!it->is_boolean()) throw ParseError("/unit_height_nbds", "expected a boolean");
    c.unit_height_nbds = it->get<bool>();
  }
  return c;
}

EnumConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ":" + e.locus(), e.message());
  }
}

std::uint64_t grid_set_count(std::size_t elements, std::size_t parameters, std::int64_t grid) {
  std::uint64_t count = 1;
  const auto base = static_cast<std::uint64_t>(grid) + 1;
  for (std::size_t i = 0; i < elements * parameters; ++i) {
    if (count > UINT64_MAX / base) return UINT64_MAX;
    count *= base;
  }
  return count;
}

std::vector<GradedSpace> enumerate_spaces(const EnumConfig& config) {
  EnumConfig exhaustive = config;
  exhaustive.mode = EnumMode::kExhaustive;
  exhaustive.validate();
  const auto universe = config_universe(config);
  const GradeGrid grid(config.grid);
  const auto sets = all_grid_sets(universe, grid);
  const std::size_t n = sets.size();

  // Meet and join tables over indices; index 0 is null, n-1 universal.
  std::vector<std::size_t> meet(n * n), join(n * n);
  auto index_of = [&](const FuzzySoftSet& f) {
    return static_cast<std::size_t>(std::lower_bound(sets.begin(), sets.end(), f) - sets.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      meet[i * n + j] = index_of(intersect(sets[i], sets[j]));
      join[i * n + j] = index_of(unite(sets[i], sets[j]));
    }
  }

  const std::size_t middle = n - 2;
  std::vector<GradedSpace> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << middle); ++mask) {
    std::uint32_t family = 1u | (1u << (n - 1)) | (mask << 1);
    bool closed = true;
    for (std::size_t i = 1; i + 1 < n && closed; ++i) {
      if (!(family >> i & 1u)) continue;
      for (std::size_t j = i + 1; j + 1 < n; ++j) {
        if (!(family >> j & 1u)) continue;
        if (!(family >> meet[i * n + j] & 1u) || !(family >> join[i * n + j] & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<FuzzySoftSet> opens;
    for (std::size_t i = 0; i < n; ++i) {
      if (family >> i & 1u) opens.push_back(sets[i]);
    }
    out.emplace_back(FuzzySoftTopology(universe, grid, std::move(opens)));
  }
  return out;
}

FuzzySoftSet random_grid_set(SeededStream& rng, const UniversePtr& universe, const GradeGrid& grid) {
  std::vector<Grade> cells;
  cells.reserve(universe->cell_count());
  const auto width = static_cast<std::uint64_t>(grid.denominator()) + 1;
  for (std::size_t i = 0; i < universe->cell_count(); ++i) {
    cells.push_back(grid.at(static_cast<std::int64_t>(rng.below(width))));
  }
  return FuzzySoftSet(universe, std::move(cells));
}

GradedSpace random_space(const UniversePtr& universe, const GradeGrid& grid, std::uint64_t seed,
                         std::size_t subbasis_size) {
  SeededStream rng(seed);
  std::vector<FuzzySoftSet> subbasis;
  for (std::size_t i = 0; i < subbasis_size; ++i) subbasis.push_back(random_grid_set(rng, universe, grid));
  return GradedSpace(generate_topology(subbasis, universe, grid));
}

std::vector<GradedSpace> build_suite(const EnumConfig& config) {
  config.validate();
  if (config.mode == EnumMode::kExhaustive) return enumerate_spaces(config);
  const auto universe = config_universe(config);
  const GradeGrid grid(config.grid);
  SeededStream seeds(*config.seed);
  std::vector<GradedSpace> out;
  out.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    out.push_back(random_space(universe, grid, seeds.next(), config.subbasis_size));
  }
  return out;
}

FuzzySoftMapping random_mapping(SeededStream& rng, const UniversePtr& target, std::size_t source_elements,
                                std::size_t source_parameters) {
  auto source = make_indexed_universe(source_elements, source_parameters, "s", "t");
  std::vector<std::size_t> u(source_elements), p(source_parameters);
  for (auto& y : u) y = rng.below(target->element_count());
  for (auto& k : p) k = rng.below(target->parameter_count());
  return FuzzySoftMapping(source, target, std::move(u), std::move(p));
}

FuzzySoftMapping random_injective_mapping(SeededStream& rng, const UniversePtr& target) {
  auto shuffled = [&](std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return v;
  };
  const std::size_t ne = 1 + rng.below(target->element_count());
  const std::size_t np = 1 + rng.below(target->parameter_count());
  auto u = shuffled(target->element_count());
  auto p = shuffled(target->parameter_count());
  u.resize(ne);
  p.resize(np);
  return FuzzySoftMapping(make_indexed_universe(ne, np, "s", "t"), target, std::move(u), std::move(p));
}

bool ImplicationReport::highlighted_hold() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const ImplicationEntry& e) { return e.refuted && !e.highlight.empty(); });
}

std::string ImplicationReport::text() const {
  std::ostringstream out;
  out << "fuzzysoft-report/1 implications\n";
  out << "suite " << fingerprint << " spaces=" << space_count << "\n";
  for (const auto& e : entries) {
    out << axiom_name(e.antecedent) << "=>" << axiom_name(e.consequent) << ' '
        << (e.refuted ? "refuted" : "holds-on-suite") << ' ' << (e.witness_file.empty() ? "-" : e.witness_file);
    if (!e.highlight.empty()) out << ' ' << e.highlight;
    out << '\n';
  }
  return out.str();
}

ImplicationReport mine_implications(const EnumConfig& config) {
  const auto suite = build_suite(config);
  const CheckOptions options{config.unit_height_nbds};
  std::vector<std::array<bool, kAllAxioms.size()>> table;
  table.reserve(suite.size());
  for (const auto& space : suite) {
    std::array<bool, kAllAxioms.size()> row{};
    for (std::size_t a = 0; a < kAllAxioms.size(); ++a) row[a] = check(space, kAllAxioms[a], options).holds;
    table.push_back(row);
  }

  auto highlight = [](Axiom a, Axiom b) -> std::string {
    using A = Axiom;
    const std::vector<std::pair<A, A>> asserted = {
        {A::kQT2, A::kQT1}, {A::kQT1, A::kQT0}, {A::kQT2, A::kQT0},
        {A::kQT0, A::kMdT0}, {A::kQT1, A::kMdT1}, {A::kQT2, A::kMdT2},
    };
    const std::vector<std::pair<A, A>> definitional = {
        {A::kQT3, A::kQRegular}, {A::kQT3, A::kQT1},   {A::kMdT3, A::kMdRegular},
        {A::kMdT3, A::kMdT1},    {A::kMdT4, A::kMdNormal}, {A::kMdT4, A::kMdT1},
    };
    const std::pair<A, A> key{a, b};
    if (std::find(asserted.begin(), asserted.end(), key) != asserted.end()) return "asserted";
    if (std::find(definitional.begin(), definitional.end(), key) != definitional.end()) return "definitional";
    return {};
  };

  ImplicationReport report;
  report.fingerprint = config.fingerprint();
  report.space_count = suite.size();
  for (std::size_t a = 0; a < kAllAxioms.size(); ++a) {
    for (std::size_t b = 0; b < kAllAxioms.size(); ++b) {
      if (a == b) continue;
      ImplicationEntry entry{kAllAxioms[a], kAllAxioms[b], false, highlight(kAllAxioms[a], kAllAxioms[b]), {}};
      for (std::size_t s = 0; s < suite.size(); ++s) {
        if (table[s][a] && !table[s][b]) {
          entry.refuted = true;
          entry.witness_file = "implication_" + std::string(axiom_name(kAllAxioms[a])) + "_" +
                               std::string(axiom_name(kAllAxioms[b])) + ".inst";
          report.counterexamples.push_back({entry.witness_file, counterexample_text(suite[s])});
          break;
        }
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

bool TheoremReport::all_pass() const {
  return std::all_of(findings.begin(), findings.end(), [](const TheoremFinding& f) { return f.pass; });
}

const TheoremFinding* TheoremReport::find(std::string_view anchor) const {
  for (const auto& f : findings) {
    if (f.anchor == anchor) return &f;
  }
  return nullptr;
}

std::string TheoremReport::text() const {
  std::ostringstream out;
  out << "fuzzysoft-report/1 theorems\n";
  out << "suite " << fingerprint << " spaces=" << space_count << "\n";
  for (const auto& f : findings) {
    out << f.anchor << ' ' << (f.pass ? "pass" : "fail") << ' ' << (f.witness_file.empty() ? "-" : f.witness_file)
        << " checked=" << f.checked;
    if (!f.detail.empty()) out << ' ' << f.detail;
    out << '\n';
  }
  return out.str();
}

TheoremReport verify_theorems(const EnumConfig& config) {
  const auto suite = build_suite(config);
  const CheckOptions options{config.unit_height_nbds};
  // Independent of the suite stream so both modes share one sampling path.
  SeededStream rng(config.seed_or_default() + 1);
  TheoremReport report;
  report.fingerprint = config.fingerprint();
  report.space_count = suite.size();
  check_algebra(config, rng, report);
  check_closure(suite, rng, report);
  check_implications(suite, options, report);
  check_oracles(suite, options, report);
  check_mappings(config, rng, report);
  check_pullbacks(suite, config, rng, report);
  return report;
}

GradedSpace refine_grid(const GradedSpace& space, std::int64_t denominator) {
  const GradeGrid fine(denominator);
  if (!fine.refines(space.grid())) throw GridIncompatible("grid " + std::to_string(denominator) +
                                                          " does not refine " +
                                                          std::to_string(space.grid().denominator()));
  return GradedSpace(FuzzySoftTopology(space.universe(), fine, space.opens()));
}

void write_counterexamples(const std::vector<Counterexample>& counterexamples, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& c : counterexamples) {
    std::ofstream out(dir / c.file_name, std::ios::binary);
    if (!out) throw Error("cannot write " + (dir / c.file_name).string());
    out << c.text;
  }
}

}  // namespace fuzzysoft
