#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzysoft/grade.hpp"
#include "fuzzysoft/soft_set.hpp"

namespace fuzzysoft {

/// Why a family fails to be a fuzzy soft topology on a grid.
struct TopologyViolation {
  enum class Kind {
    kMissingNull,       // axiom (1)
    kMissingUniversal,  // axiom (1)
    kNotMeetClosed,     // axiom (2)
    kNotJoinClosed,     // axiom (3)
    kOffGrid,
    kDuplicate,
  };

  Kind kind;
  /// Indices into the checked family; both set for pair violations.
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
  std::string message;

  /// "axiom (1)", "axiom (2)", "axiom (3)", "grid" or "duplicate".
  std::string axiom() const;
};

struct TopologyCheck {
  std::optional<TopologyViolation> violation;
  bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks the three topology axioms plus grid membership and uniqueness.
/// Pairs are scanned in index order, so the reported pair is the first one.
TopologyCheck verify_topology(std::span<const FuzzySoftSet> family, const GradeGrid& grid);

/// A validated finite topology; opens are stored in canonical order.
class FuzzySoftTopology {
 public:
  /// Throws TopologyError (or UniverseMismatch) when `opens` is not a topology.
  FuzzySoftTopology(UniversePtr universe, GradeGrid grid, std::vector<FuzzySoftSet> opens);

  const UniversePtr& universe() const noexcept { return universe_; }
  const GradeGrid& grid() const noexcept { return grid_; }
  const std::vector<FuzzySoftSet>& opens() const noexcept { return opens_; }
  std::size_t size() const noexcept { return opens_.size(); }

  bool is_open(const FuzzySoftSet& f) const;

  friend bool operator==(const FuzzySoftTopology& a, const FuzzySoftTopology& b) {
    return *a.universe_ == *b.universe_ && a.grid_ == b.grid_ && a.opens_ == b.opens_;
  }

 private:
  UniversePtr universe_;
  GradeGrid grid_;
  std::vector<FuzzySoftSet> opens_;
};

/// Smallest topology containing `subbasis` (closure under pairwise meet and join).
/// Throws OffGridError when a subbasis member leaves the grid.
FuzzySoftTopology generate_topology(std::span<const FuzzySoftSet> subbasis, const UniversePtr& universe,
                                    const GradeGrid& grid);

FuzzySoftTopology indiscrete_topology(const UniversePtr& universe, const GradeGrid& grid);
/// Every grid set is open.
FuzzySoftTopology full_grid_topology(const UniversePtr& universe, const GradeGrid& grid);

/// All (d+1)^(|E||X|) grid sets in canonical order.
std::vector<FuzzySoftSet> all_grid_sets(const UniversePtr& universe, const GradeGrid& grid);

/// A topology together with the derived data every checker needs.
class GradedSpace {
 public:
  explicit GradedSpace(FuzzySoftTopology topology);

  const FuzzySoftTopology& topology() const noexcept { return topology_; }
  const UniversePtr& universe() const noexcept { return topology_.universe(); }
  const GradeGrid& grid() const noexcept { return topology_.grid(); }
  const std::vector<FuzzySoftSet>& opens() const noexcept { return topology_.opens(); }
  /// Complements of the opens, in canonical order.
  const std::vector<FuzzySoftSet>& closed_sets() const noexcept { return closed_; }
  /// All grid points of the universe, in point order.
  const std::vector<FuzzySoftPoint>& points() const noexcept { return points_; }

  bool is_open(const FuzzySoftSet& f) const { return topology_.is_open(f); }

 private:
  FuzzySoftTopology topology_;
  std::vector<FuzzySoftSet> closed_;
  std::vector<FuzzySoftPoint> points_;
};

std::vector<FuzzySoftSet> closed_family(const GradedSpace& space);
bool is_closed(const GradedSpace& space, const FuzzySoftSet& f);

/// Meet of all closed supersets of f.
FuzzySoftSet closure(const GradedSpace& space, const FuzzySoftSet& f);

/// g is a nbd of f: some open h has f ⊑ h ⊑ g.
bool is_nbd(const GradedSpace& space, const FuzzySoftSet& g, const FuzzySoftSet& f);
/// f is a Q-nbd of g: some open h has g q h and h ⊑ f.
bool is_q_nbd(const GradedSpace& space, const FuzzySoftSet& f, const FuzzySoftSet& g);

/// Open sets containing p.
std::vector<FuzzySoftSet> open_nbds(const GradedSpace& space, const FuzzySoftPoint& p);
/// Open sets quasi-coincident with p.
std::vector<FuzzySoftSet> open_q_nbds(const GradedSpace& space, const FuzzySoftPoint& p);

/// Closure membership decided through Q-neighbourhoods: every open g with
/// p q g must satisfy g q f.
bool in_closure_via_qnbd(const GradedSpace& space, const FuzzySoftPoint& p, const FuzzySoftSet& f);

}  // namespace fuzzysoft
