#include "fuzzysoft/mapping.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fuzzysoft/errors.hpp"

namespace fuzzysoft {

namespace {

bool all_distinct(const std::vector<std::size_t>& v) {
  return std::set<std::size_t>(v.begin(), v.end()).size() == v.size();
}

bool covers(const std::vector<std::size_t>& v, std::size_t n) {
  return std::set<std::size_t>(v.begin(), v.end()).size() == n;
}

}  // namespace

FuzzySoftMapping::FuzzySoftMapping(UniversePtr source, UniversePtr target, std::vector<std::size_t> element_map,
                                   std::vector<std::size_t> parameter_map)
    : source_(std::move(source)), target_(std::move(target)), u_(std::move(element_map)),
      p_(std::move(parameter_map)) {
  if (u_.size() != source_->element_count() || p_.size() != source_->parameter_count()) {
    throw Error("mapping tables must cover every source element and parameter");
  }
  for (auto y : u_) {
    if (y >= target_->element_count()) throw Error("element map leaves the target universe");
  }
  for (auto k : p_) {
    if (k >= target_->parameter_count()) throw Error("parameter map leaves the target universe");
  }
}

FuzzySoftMapping FuzzySoftMapping::identity(const UniversePtr& universe) {
  std::vector<std::size_t> u(universe->element_count()), p(universe->parameter_count());
  std::iota(u.begin(), u.end(), 0);
  std::iota(p.begin(), p.end(), 0);
  return FuzzySoftMapping(universe, universe, std::move(u), std::move(p));
}

bool FuzzySoftMapping::injective() const { return all_distinct(u_) && all_distinct(p_); }

bool FuzzySoftMapping::surjective() const {
  return covers(u_, target_->element_count()) && covers(p_, target_->parameter_count());
}

bool FuzzySoftMapping::constant() const {
  auto same = [](const std::vector<std::size_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>{}) == v.end();
  };
  return same(u_) && same(p_);
}

FuzzySoftSet image(const FuzzySoftMapping& m, const FuzzySoftSet& f) {
  require_same_universe(m.source(), f.universe());
  const auto& src = *m.source();
  std::vector<Grade> out(m.target()->cell_count());
  for (std::size_t e = 0; e < src.parameter_count(); ++e) {
    for (std::size_t x = 0; x < src.element_count(); ++x) {
      Grade& slot = out[m.target()->cell(m.parameter_map()[e], m.element_map()[x])];
      slot = max(slot, f.at(e, x));
    }
  }
  return FuzzySoftSet(m.target(), std::move(out));
}

FuzzySoftSet preimage(const FuzzySoftMapping& m, const FuzzySoftSet& g) {
  require_same_universe(m.target(), g.universe());
  const auto& src = *m.source();
  std::vector<Grade> out;
  out.reserve(src.cell_count());
  for (std::size_t e = 0; e < src.parameter_count(); ++e) {
    for (std::size_t x = 0; x < src.element_count(); ++x) {
      out.push_back(g.at(m.parameter_map()[e], m.element_map()[x]));
    }
  }
  return FuzzySoftSet(m.source(), std::move(out));
}

ContinuityVerdict is_continuous(const FuzzySoftMapping& m, const GradedSpace& source_space,
                                const GradedSpace& target_space) {
  require_same_universe(m.source(), source_space.universe());
  require_same_universe(m.target(), target_space.universe());
  if (!source_space.grid().refines(target_space.grid())) {
    throw GridIncompatible("source grid denominator " + std::to_string(source_space.grid().denominator()) +
                           " is not a multiple of target denominator " +
                           std::to_string(target_space.grid().denominator()));
  }
  for (const auto& g : target_space.opens()) {
    if (!source_space.is_open(preimage(m, g))) return {false, g};
  }
  return {};
}

FuzzySoftTopology initial_topology(const FuzzySoftMapping& m, const GradedSpace& target_space) {
  require_same_universe(m.target(), target_space.universe());
  std::vector<FuzzySoftSet> pulled;
  pulled.reserve(target_space.opens().size());
  for (const auto& g : target_space.opens()) pulled.push_back(preimage(m, g));
  return generate_topology(pulled, m.source(), target_space.grid());
}

bool preimage_preserves_nonq(const FuzzySoftMapping& m, const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return quasi_coincident(preimage(m, f), preimage(m, g));
}

}  // namespace fuzzysoft
