// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzysoft/axioms.hpp"
#include "fuzzysoft/instance.hpp"
#include "fuzzysoft/mapping.hpp"
#include "fuzzysoft/search.hpp"

using namespace fuzzysoft;
namespace fs = std::filesystem;

namespace {

const fs::path kData = FUZZYSOFT_TEST_DATA;
const fs::path kFsq = FUZZYSOFT_FSQ;
const fs::path kOut = FUZZYSOFT_ACCEPT_OUT;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;

  void fail(const std::string& what) {
    if (failures++ == 0) detail = what;
    pass = false;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& name, const GradedSpace& space) {
  fs::create_directories(kOut);
  std::ofstream(kOut / name, std::ios::binary) << serialize_instance(instance_from_space(space));
}

struct Proc {
  int status;
  std::string out;
};

Proc run_fsq(const std::string& args) {
  const std::string cmd = "'" + kFsq.string() + "' " + args + " 2>/dev/null";
  Proc p{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return p;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, n);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

// ---- integer oracle for grid sets ----------------------------------------------

using Vec = std::vector<std::int64_t>;

Vec nums(const FuzzySoftSet& f, std::int64_t d) {
  Vec v;
  for (const auto& g : f.grades()) v.push_back(g.num() * (d / g.den()));
  return v;
}

FuzzySoftSet from_nums(const UniversePtr& u, const Vec& v, std::int64_t d) {
  std::vector<Grade> g;
  for (auto k : v) g.emplace_back(k, d);
  return FuzzySoftSet(u, g);
}

bool oracle_q(const Vec& a, const Vec& b, std::int64_t d) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] + b[c] > d) return true;
  return false;
}

bool oracle_sub(const Vec& a, const Vec& b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] > b[c]) return false;
  return true;
}

// Closure from scratch: pointwise minimum of the closed sets above f.
Vec oracle_closure(const GradedSpace& s, const Vec& f, std::int64_t d) {
  Vec out(f.size(), d);
  for (const auto& open : s.opens()) {
    Vec k = nums(open, d);
    for (auto& x : k) x = d - x;
    if (!oracle_sub(f, k)) continue;
    for (std::size_t c = 0; c < f.size(); ++c) out[c] = std::min(out[c], k[c]);
  }
  return out;
}

FuzzySoftSet draw_set(SeededStream& rng, const UniversePtr& u, std::int64_t d) {
  return random_grid_set(rng, u, GradeGrid(d));
}

// ---- suites --------------------------------------------------------------------

struct TinyConfig {
  std::size_t elements, parameters;
  std::int64_t grid;
};

// Every universe/grid within the exhaustive bound for d in {2, 3, 4}.
const std::vector<TinyConfig> kTiny = {{1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {1, 1, 3}, {2, 1, 3}, {1, 2, 3}, {1, 1, 4}};

std::vector<GradedSpace> exhaustive(std::size_t x, std::size_t e, std::int64_t d) {
  EnumConfig c;
  c.elements = x;
  c.parameters = e;
  c.grid = d;
  c.seed = 0;
  return enumerate_spaces(c);
}

std::vector<GradedSpace> tiny_suite() {
  std::vector<GradedSpace> out;
  for (const auto& t : kTiny) {
    auto part = exhaustive(t.elements, t.parameters, t.grid);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<GradedSpace> random_suite(std::uint64_t seed, std::size_t count) {
  auto u = make_indexed_universe(3, 2);
  SeededStream rng(seed);
  std::vector<GradedSpace> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_space(u, GradeGrid(4), rng.next(), 3));
  return out;
}

// ---- criteria ------------------------------------------------------------------

void algebra_case(Outcome& o, const FuzzySoftSet& f, const FuzzySoftSet& g, const FuzzySoftSet& h,
                  const std::vector<FuzzySoftPoint>& points, std::int64_t d) {
  const auto u = f.universe();
  const Vec nf = nums(f, d), ng = nums(g, d);
  Vec mx(nf.size()), mn(nf.size()), cf(nf.size());
  for (std::size_t c = 0; c < nf.size(); ++c) {
    mx[c] = std::max(nf[c], ng[c]);
    mn[c] = std::min(nf[c], ng[c]);
    cf[c] = d - nf[c];
  }
  auto check = [&](bool ok, const char* law) {
    if (!ok) o.fail(std::string(law) + " on f=" + f.str() + " g=" + g.str() + " h=" + h.str());
  };
  check(unite(f, g) == from_nums(u, mx, d), "union oracle");
  check(intersect(f, g) == from_nums(u, mn, d), "meet oracle");
  check(complement(f) == from_nums(u, cf, d), "complement oracle");
  check(quasi_coincident(f, g) == oracle_q(nf, ng, d), "q oracle");
  check(subset(f, g) == oracle_sub(nf, ng), "subset oracle");

  check(unite(f, g) == unite(g, f) && intersect(f, g) == intersect(g, f), "commutative");
  check(unite(f, unite(g, h)) == unite(unite(f, g), h), "join associative");
  check(intersect(f, intersect(g, h)) == intersect(intersect(f, g), h), "meet associative");
  check(unite(f, f) == f && intersect(f, f) == f, "idempotent");
  check(unite(f, intersect(f, g)) == f && intersect(f, unite(f, g)) == f, "absorption");
  check(unite(f, null_set(u)) == f && intersect(f, universal_set(u)) == f, "bounds");
  check(unite(f, universal_set(u)).is_universal() && intersect(f, null_set(u)).is_null(), "bounds absorb");
  check(complement(unite(f, g)) == intersect(complement(f), complement(g)), "De Morgan join");
  check(complement(intersect(f, g)) == unite(complement(f), complement(g)), "De Morgan meet");
  check(complement(complement(f)) == f, "involution");

  check(subset(f, g) == !quasi_coincident(f, complement(g)), "P-c (1)");
  check(!quasi_coincident(f, g) || !intersect(f, g).is_null(), "P-c (2)");
  check(!quasi_coincident(f, complement(f)), "P-c (3)");
  bool via_point = false, forward = true;
  for (const auto& p : points) {
    via_point = via_point || (point_belongs(p, f) && quasi_coincident(p, g));
    forward = forward && (!quasi_coincident(p, f) || quasi_coincident(p, g));
    check(!quasi_coincident(p, f) == point_belongs(p, complement(f)), "P-c (5)");
  }
  check(via_point == quasi_coincident(f, g), "P-c (4)");
  check(forward == subset(f, g), "P-c (6)");
}

Outcome criterion_algebra() {
  Outcome o;
  std::size_t checked = 0;
  {
    auto u = make_indexed_universe(2, 1);
    const GradeGrid grid(2);
    auto sets = all_grid_sets(u, grid);
    auto points = all_grid_points(u, grid);
    for (const auto& f : sets)
      for (const auto& g : sets)
        for (const auto& h : sets) {
          algebra_case(o, f, g, h, points, 2);
          ++checked;
        }
  }
  {
    auto u = make_indexed_universe(3, 2);
    auto points = all_grid_points(u, GradeGrid(4));
    SeededStream rng(1001);
    for (int i = 0; i < 10000; ++i) {
      auto f = draw_set(rng, u, 4), g = draw_set(rng, u, 4), h = draw_set(rng, u, 4);
      algebra_case(o, f, g, h, points, 4);
      ++checked;
    }
  }
  if (o.pass) o.detail = "exhaustive 2x1 d=2 (729 triples over 9 sets) + 10000 random at 3x2 d=4; cases=" +
                         std::to_string(checked);
  return o;
}

void closure_on_space(Outcome& o, const GradedSpace& s, const std::vector<FuzzySoftSet>& probes,
                      const std::string& label) {
  const std::int64_t d = s.grid().denominator();
  const auto u = s.universe();
  auto report = [&](const std::string& what, const FuzzySoftSet& f) {
    o.fail(label + ": " + what + " f=" + f.str());
  };
  if (!(closure(s, null_set(u)) == null_set(u))) report("closure(null)", null_set(u));
  if (!(closure(s, universal_set(u)) == universal_set(u))) report("closure(universal)", universal_set(u));
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& f = probes[i];
    const auto cf = closure(s, f);
    if (!(cf == from_nums(u, oracle_closure(s, nums(f, d), d), d))) report("closure oracle", f);
    if (!subset(f, cf)) report("extensive", f);
    if (!(closure(s, cf) == cf)) report("idempotent", f);
    if (!is_closed(s, cf)) report("closed", f);
    const auto& g = probes[(i * 5 + 1) % probes.size()];
    const auto up = unite(f, g);
    if (!subset(cf, closure(s, up))) report("monotone", f);
    for (const auto& p : s.points()) {
      if (in_closure_via_qnbd(s, p, f) != point_belongs(p, cf)) report("t-cl at " + p.str(), f);
    }
  }
}

Outcome criterion_closure(const std::vector<GradedSpace>& random_spaces) {
  Outcome o;
  std::size_t spaces = 0;
  for (const auto& s : exhaustive(2, 1, 2)) {
    closure_on_space(o, s, all_grid_sets(s.universe(), s.grid()), "exhaustive");
    ++spaces;
  }
  SeededStream rng(2002);
  for (const auto& s : random_spaces) {
    std::vector<FuzzySoftSet> probes = s.opens();
    probes.insert(probes.end(), s.closed_sets().begin(), s.closed_sets().end());
    for (const auto& p : s.points()) probes.push_back(p.as_set());
    for (int i = 0; i < 40; ++i) probes.push_back(draw_set(rng, s.universe(), 4));
    closure_on_space(o, s, probes, "random");
    ++spaces;
  }
  if (o.pass) o.detail = "spaces=" + std::to_string(spaces) + " (49 exhaustive 2x1 d=2, 200 random 3x2 d=4)";
  return o;
}

Outcome criterion_mapping() {
  Outcome o;
  SeededStream rng(3003);
  constexpr std::int64_t d = 4;
  for (int i = 0; i < 1000; ++i) {
    auto target = make_indexed_universe(1 + rng.below(3), 1 + rng.below(2), "y", "k");
    auto m = random_mapping(rng, target, 1 + rng.below(3), 1 + rng.below(2));
    const auto f = draw_set(rng, target, d);
    // g below the complement of f, so f and g are not quasi-coincident by construction.
    Vec ng;
    for (auto k : nums(f, d)) ng.push_back(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(d - k + 1))));
    const auto g = from_nums(target, ng, d);
    auto check = [&](bool ok, const char* law) {
      if (!ok) o.fail(std::string(law) + " at triple " + std::to_string(i) + " f=" + f.str() + " g=" + g.str());
    };
    check(!quasi_coincident(f, g), "construction");
    check(!preimage_preserves_nonq(m, f, g), "preimage keeps non-coincidence");
    check(!quasi_coincident(preimage(m, f), preimage(m, g)), "preimage keeps non-coincidence (direct)");
    check(subset(preimage(m, intersect(f, g)), preimage(m, f)), "preimage monotone");
    check(preimage(m, unite(f, g)) == unite(preimage(m, f), preimage(m, g)), "preimage join");
    check(preimage(m, intersect(f, g)) == intersect(preimage(m, f), preimage(m, g)), "preimage meet");
    check(preimage(m, complement(f)) == complement(preimage(m, f)), "preimage complement");
    const auto a = draw_set(rng, m.source(), d), b = draw_set(rng, m.source(), d);
    check(subset(image(m, intersect(a, b)), image(m, a)), "image monotone");
    check(subset(a, preimage(m, image(m, a))), "a below preimage(image(a))");
    if (m.surjective()) check(subset(image(m, preimage(m, f)), f), "image(preimage(f)) below f");
  }
  if (o.pass) o.detail = "triples=1000 with f not q g";
  return o;
}

Outcome criterion_chain(const std::vector<GradedSpace>& tiny, const std::vector<GradedSpace>& random_spaces) {
  Outcome o;
  std::size_t n = 0, t2 = 0, t1 = 0;
  auto run = [&](const GradedSpace& s, std::size_t index) {
    const bool q2 = check_q_t2(s).holds, q1 = check_q_t1(s).holds, q0 = check_q_t0(s).holds;
    t2 += q2;
    t1 += q1;
    ++n;
    if ((q2 && !q1) || (q1 && !q0)) {
      const auto name = "c4_chain_" + std::to_string(index) + ".inst";
      emit(name, s);
      o.fail(std::string(q2 && !q1 ? "Q_T2 without Q_T1" : "Q_T1 without Q_T0") + " in " + name);
    }
  };
  for (std::size_t i = 0; i < tiny.size(); ++i) run(tiny[i], i);
  for (std::size_t i = 0; i < random_spaces.size(); ++i) run(random_spaces[i], tiny.size() + i);
  if (o.pass)
    o.detail = "spaces=" + std::to_string(n) + " q-T2=" + std::to_string(t2) + " q-T1=" + std::to_string(t1);
  return o;
}

struct OraclePair {
  const char* name;
  std::function<bool(const GradedSpace&)> checker;
  std::function<bool(const GradedSpace&)> oracle;
};

const std::vector<OraclePair> kOraclePairs = {
    {"q_t0_closure", [](const auto& s) { return check_q_t0(s).holds; },
     [](const auto& s) { return oracle_q_t0_closure(s).holds; }},
    {"q_t1_points_closed", [](const auto& s) { return check_q_t1(s).holds; },
     [](const auto& s) { return oracle_q_t1_points_closed(s).holds; }},
    {"q_t2_closure_meet", [](const auto& s) { return check_q_t2(s).holds; },
     [](const auto& s) { return oracle_q_t2_closure_meet(s).holds; }},
    {"q_regular_refinement", [](const auto& s) { return check_q_regular(s).holds; },
     [](const auto& s) { return oracle_q_regular_refinement(s).holds; }},
};

Outcome criterion_oracles() {
  Outcome o;
  // d=2: every exhaustive universe. d=4: the exhaustive 1x1 suite plus each d=2
  // space read on the d=4 grid (the bound admits no larger universe at d=4).
  std::vector<GradedSpace> d2, d4 = exhaustive(1, 1, 4);
  for (auto [x, e] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    auto part = exhaustive(x, e, 2);
    d2.insert(d2.end(), part.begin(), part.end());
  }
  for (const auto& s : d2) d4.push_back(refine_grid(s, 4));

  std::size_t d2_dis = 0, d2_persist = 0, d4_dis = 0;
  std::string first_d2;
  for (const auto& pair : kOraclePairs) {
    for (std::size_t i = 0; i < d2.size(); ++i) {
      if (pair.checker(d2[i]) == pair.oracle(d2[i])) continue;
      ++d2_dis;
      const auto name = std::string("c5_") + pair.name + "_d2_" + std::to_string(i) + ".inst";
      emit(name, d2[i]);
      if (first_d2.empty()) first_d2 = serialize_instance(instance_from_space(d2[i]));
      const auto fine = refine_grid(d2[i], 4);
      if (pair.checker(fine) != pair.oracle(fine)) {
        ++d2_persist;
        o.fail(std::string(pair.name) + " disagreement at d=2 persists at d=4: " + name);
      }
    }
    for (std::size_t i = 0; i < d4.size(); ++i) {
      if (pair.checker(d4[i]) == pair.oracle(d4[i])) continue;
      ++d4_dis;
      const auto name = std::string("c5_") + pair.name + "_d4_" + std::to_string(i) + ".inst";
      emit(name, d4[i]);
      o.fail(std::string(pair.name) + " disagreement at d=4: " + name);
    }
  }
  if (d2_dis > 0) {
    const auto committed = kData / "findings" / "q_t0_closure_d2.inst";
    if (!fs::exists(committed)) {
      o.fail("d=2 disagreement without a committed finding");
    } else if (slurp(committed) != first_d2) {
      o.fail("first d=2 disagreement differs from the committed finding " + committed.filename().string());
    }
  }
  const std::string counts = "d=2 spaces=" + std::to_string(d2.size()) + " disagreements=" + std::to_string(d2_dis) +
                             " (persisting at d=4: " + std::to_string(d2_persist) + ", committed finding) d=4 spaces=" +
                             std::to_string(d4.size()) + " disagreements=" + std::to_string(d4_dis);
  o.detail = o.pass ? counts : o.detail + "; " + counts;
  return o;
}

Outcome criterion_bridges(const std::vector<GradedSpace>& tiny) {
  Outcome o;
  const std::vector<std::pair<Axiom, Axiom>> bridges = {
      {Axiom::kQT0, Axiom::kMdT0}, {Axiom::kQT1, Axiom::kMdT1}, {Axiom::kQT2, Axiom::kMdT2}};
  std::size_t premises = 0;
  for (std::size_t i = 0; i < tiny.size(); ++i) {
    for (auto [q, md] : bridges) {
      if (!check(tiny[i], q).holds) continue;
      ++premises;
      if (check(tiny[i], md).holds) continue;
      const std::string name = "c6_" + std::string(axiom_name(md)) + "_" + std::to_string(i) + ".inst";
      emit(name, tiny[i]);
      // The witness must replay through the command line.
      const auto replay_q = run_fsq("check " + quoted(kOut / name) + " --axiom " + std::string(axiom_name(q)));
      const auto replay_md = run_fsq("check " + quoted(kOut / name) + " --axiom " + std::string(axiom_name(md)));
      o.fail(std::string(axiom_name(q)) + " without " + std::string(axiom_name(md)) + " in " + name +
             " (replay exits " + std::to_string(replay_q.status) + "/" + std::to_string(replay_md.status) + ")");
    }
  }
  if (o.pass)
    o.detail = "spaces=" + std::to_string(tiny.size()) + " premises satisfied=" + std::to_string(premises);
  return o;
}

Outcome criterion_pullback(const std::vector<GradedSpace>& tiny) {
  Outcome o;
  SeededStream rng(7007);
  std::size_t targets = 0, maps = 0;
  for (std::size_t i = 0; i < tiny.size(); ++i) {
    const auto& target = tiny[i];
    if (!check_q_t2(target).holds) continue;
    ++targets;
    for (int k = 0; k < 50; ++k) {
      auto m = random_injective_mapping(rng, target.universe());
      GradedSpace source(initial_topology(m, target));
      ++maps;
      if (!is_continuous(m, source, target).holds) o.fail("initial topology not continuous");
      if (!check_q_t2(source).holds) {
        const auto name = "c7_pullback_" + std::to_string(i) + "_" + std::to_string(k) + ".inst";
        emit(name, source);
        o.fail("source not q-T2: " + name);
      }
    }
  }
  if (o.pass) o.detail = "q-T2 targets=" + std::to_string(targets) + " injective mappings=" + std::to_string(maps);
  return o;
}

Outcome criterion_io() {
  Outcome o;
  // Determinism through the binary.
  std::size_t reports = 0;
  for (const char* cfg : {"configs/tiny.json", "configs/tiny_random.json"}) {
    for (const char* cmd : {"mine", "theorems"}) {
      const std::string args = std::string(cmd) + " --config " + quoted(kData / cfg);
      const auto a = run_fsq(args), b = run_fsq(args);
      ++reports;
      if (a.out.empty() || a.out != b.out || a.status != b.status) o.fail(std::string("nondeterministic ") + args);
    }
  }
  // Golden files.
  std::size_t golden = 0;
  for (const auto& entry : fs::directory_iterator(kData / "golden")) {
    const auto text = slurp(entry.path());
    try {
      const auto inst = parse_instance(text);
      const auto again = serialize_instance(inst);
      if (!(parse_instance(again) == inst) || again != text) o.fail("round-trip " + entry.path().filename().string());
    } catch (const std::exception& e) {
      o.fail(entry.path().filename().string() + ": " + e.what());
    }
    ++golden;
  }
  if (golden != 20) o.fail("expected 20 golden files, found " + std::to_string(golden));

  struct Row {
    std::string args;
    int expect;
  };
  auto d = [](const char* name) { return quoted(kData / name); };
  const std::vector<Row> matrix = {
      {"check " + d("indiscrete.inst") + " --axiom Q_T0", 1},
      {"check " + d("fullgrid.inst") + " --all", 0},
      {"closure " + d("indiscrete.inst") + " --set f", 0},
      {"verify " + d("one_open.inst"), 0},
      {"verify " + d("broken.inst"), 1},
      {"continuous " + d("maps.inst") + " --mapping to_indiscrete", 0},
      {"continuous " + d("maps.inst") + " --mapping to_one_open", 1},
      {"check " + d("indiscrete.inst") + " --axiom NOT_AN_AXIOM", 2},
      {"check " + d("missing.inst") + " --all", 2},
      {"check " + d("offgrid.inst") + " --all", 2},
      {"theorems --config " + d("configs/too_big.json"), 2},
      {"mine --config " + d("configs/tiny.json"), 0},
  };
  for (const auto& row : matrix) {
    const auto p = run_fsq(row.args);
    if (p.status != row.expect)
      o.fail("fsq " + row.args + " exited " + std::to_string(p.status) + ", expected " + std::to_string(row.expect));
  }
  const auto closure_out = run_fsq("closure " + d("indiscrete.inst") + " --set f").out;
  if (closure_out != "closure(f) = [1,1]\n") o.fail("closure output: " + closure_out);
  if (o.pass)
    o.detail = "reports compared=" + std::to_string(reports) + " golden=" + std::to_string(golden) +
               " cli invocations=" + std::to_string(matrix.size());
  return o;
}

}  // namespace

int main() {
  fs::remove_all(kOut);
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0 && secs >= limit) o.fail("runtime " + std::to_string(secs) + "s over limit");
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << id << " " << name << ": " << (o.pass ? "PASS" : "FAIL") << " [" << secs << "s";
    if (limit > 0) line << " < " << limit << "s";
    line << "] ";
    if (o.failures > 0) line << "failures=" << o.failures << " ";
    line << o.detail;
    std::cout << line.str() << std::endl;
  };

  const auto tiny = tiny_suite();
  const auto random_spaces = random_suite(4004, 200);

  report(1, "algebra", 10, criterion_algebra);
  report(2, "closure", 60, [&] { return criterion_closure(random_spaces); });
  report(3, "mapping", 10, criterion_mapping);
  report(4, "axiom chain", 0, [&] { return criterion_chain(tiny, random_spaces); });
  report(5, "characterization oracles", 0, criterion_oracles);
  report(6, "bridge theorems", 0, [&] { return criterion_bridges(tiny); });
  report(7, "pullback", 120, [&] { return criterion_pullback(tiny); });
  report(8, "determinism and io", 0, criterion_io);
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
