#include "fuzzysoft/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fuzzysoft/errors.hpp"

namespace fuzzysoft {

std::string TopologyViolation::axiom() const {
  switch (kind) {
    case Kind::kMissingNull:
    case Kind::kMissingUniversal:
      return "axiom (1)";
    case Kind::kNotMeetClosed:
      return "axiom (2)";
    case Kind::kNotJoinClosed:
      return "axiom (3)";
    case Kind::kOffGrid:
      return "grid";
    case Kind::kDuplicate:
      return "duplicate";
  }
  return "unknown";
}

TopologyCheck verify_topology(std::span<const FuzzySoftSet> family, const GradeGrid& grid) {
  using Kind = TopologyViolation::Kind;
  if (family.empty()) {
    return {TopologyViolation{Kind::kMissingNull, {}, {}, "empty family lacks the null set"}};
  }
  const UniversePtr& universe = family.front().universe();
  std::map<FuzzySoftSet, std::size_t> index;
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_universe(universe, family[i].universe());
    if (!family[i].on_grid(grid)) {
      return {TopologyViolation{Kind::kOffGrid, i, {}, "member " + family[i].str() + " is off the grid"}};
    }
    auto [it, fresh] = index.emplace(family[i], i);
    if (!fresh) {
      return {TopologyViolation{Kind::kDuplicate, it->second, i, "member " + family[i].str() + " repeated"}};
    }
  }
  if (!index.count(null_set(universe))) {
    return {TopologyViolation{Kind::kMissingNull, {}, {}, "null set is not a member"}};
  }
  if (!index.count(universal_set(universe))) {
    return {TopologyViolation{Kind::kMissingUniversal, {}, {}, "universal set is not a member"}};
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto meet = intersect(family[i], family[j]);
      if (!index.count(meet)) {
        return {TopologyViolation{Kind::kNotMeetClosed, i, j,
                                  "intersection " + meet.str() + " of " + family[i].str() + " and " +
                                      family[j].str() + " is not a member"}};
      }
      auto join = unite(family[i], family[j]);
      if (!index.count(join)) {
        return {TopologyViolation{Kind::kNotJoinClosed, i, j,
                                  "union " + join.str() + " of " + family[i].str() + " and " +
                                      family[j].str() + " is not a member"}};
      }
    }
  }
  return {};
}

FuzzySoftTopology::FuzzySoftTopology(UniversePtr universe, GradeGrid grid, std::vector<FuzzySoftSet> opens)
    : universe_(std::move(universe)), grid_(grid), opens_(std::move(opens)) {
  for (const auto& f : opens_) require_same_universe(universe_, f.universe());
  auto check = verify_topology(opens_, grid_);
  if (!check.ok()) {
    throw TopologyError("not a topology, " + check.violation->axiom() + ": " + check.violation->message);
  }
  std::sort(opens_.begin(), opens_.end());
}

bool FuzzySoftTopology::is_open(const FuzzySoftSet& f) const {
  require_same_universe(universe_, f.universe());
  return std::binary_search(opens_.begin(), opens_.end(), f);
}

FuzzySoftTopology generate_topology(std::span<const FuzzySoftSet> subbasis, const UniversePtr& universe,
                                    const GradeGrid& grid) {
  std::set<FuzzySoftSet> family{null_set(universe), universal_set(universe)};
  std::vector<FuzzySoftSet> pending;
  for (const auto& s : subbasis) {
    require_same_universe(universe, s.universe());
    s.require_on_grid(grid);
    if (family.insert(s).second) pending.push_back(s);
  }
  // Each new member is combined with everything present; the grid bounds the
  // number of distinct sets, so the worklist drains.
  while (!pending.empty()) {
    FuzzySoftSet next = std::move(pending.back());
    pending.pop_back();
    std::vector<FuzzySoftSet> snapshot(family.begin(), family.end());
    for (const auto& other : snapshot) {
      for (auto candidate : {intersect(next, other), unite(next, other)}) {
        if (family.insert(candidate).second) pending.push_back(std::move(candidate));
      }
    }
  }
  return FuzzySoftTopology(universe, grid, {family.begin(), family.end()});
}

FuzzySoftTopology indiscrete_topology(const UniversePtr& universe, const GradeGrid& grid) {
  return FuzzySoftTopology(universe, grid, {null_set(universe), universal_set(universe)});
}

FuzzySoftTopology full_grid_topology(const UniversePtr& universe, const GradeGrid& grid) {
  return FuzzySoftTopology(universe, grid, all_grid_sets(universe, grid));
}

std::vector<FuzzySoftSet> all_grid_sets(const UniversePtr& universe, const GradeGrid& grid) {
  const std::size_t cells = universe->cell_count();
  const auto values = grid.values();
  std::vector<std::size_t> digits(cells, 0);
  std::vector<FuzzySoftSet> out;
  while (true) {
    std::vector<Grade> grades(cells);
    for (std::size_t i = 0; i < cells; ++i) grades[i] = values[digits[i]];
    out.emplace_back(universe, std::move(grades));
    // Odometer with the first cell most significant keeps canonical order.
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++digits[i] < values.size()) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
  }
}

GradedSpace::GradedSpace(FuzzySoftTopology topology)
    : topology_(std::move(topology)), points_(all_grid_points(topology_.universe(), topology_.grid())) {
  closed_.reserve(topology_.size());
  for (const auto& f : topology_.opens()) closed_.push_back(complement(f));
  std::sort(closed_.begin(), closed_.end());
}

std::vector<FuzzySoftSet> closed_family(const GradedSpace& space) { return space.closed_sets(); }

bool is_closed(const GradedSpace& space, const FuzzySoftSet& f) { return space.is_open(complement(f)); }

FuzzySoftSet closure(const GradedSpace& space, const FuzzySoftSet& f) {
  require_same_universe(space.universe(), f.universe());
  FuzzySoftSet result = universal_set(space.universe());
  for (const auto& k : space.closed_sets()) {
    if (subset(f, k)) result = intersect(result, k);
  }
  return result;
}

bool is_nbd(const GradedSpace& space, const FuzzySoftSet& g, const FuzzySoftSet& f) {
  require_same_universe(g.universe(), f.universe());
  return std::any_of(space.opens().begin(), space.opens().end(),
                     [&](const FuzzySoftSet& h) { return subset(f, h) && subset(h, g); });
}

bool is_q_nbd(const GradedSpace& space, const FuzzySoftSet& f, const FuzzySoftSet& g) {
  require_same_universe(g.universe(), f.universe());
  return std::any_of(space.opens().begin(), space.opens().end(),
                     [&](const FuzzySoftSet& h) { return quasi_coincident(g, h) && subset(h, f); });
}

std::vector<FuzzySoftSet> open_nbds(const GradedSpace& space, const FuzzySoftPoint& p) {
  std::vector<FuzzySoftSet> out;
  for (const auto& h : space.opens()) {
    if (point_belongs(p, h)) out.push_back(h);
  }
  return out;
}

std::vector<FuzzySoftSet> open_q_nbds(const GradedSpace& space, const FuzzySoftPoint& p) {
  std::vector<FuzzySoftSet> out;
  for (const auto& h : space.opens()) {
    if (quasi_coincident(p, h)) out.push_back(h);
  }
  return out;
}

bool in_closure_via_qnbd(const GradedSpace& space, const FuzzySoftPoint& p, const FuzzySoftSet& f) {
  require_same_universe(p.universe(), f.universe());
  return std::all_of(space.opens().begin(), space.opens().end(), [&](const FuzzySoftSet& g) {
    return !quasi_coincident(p, g) || quasi_coincident(g, f);
  });
}

}  // namespace fuzzysoft
