#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzysoft/soft_set.hpp"
#include "fuzzysoft/topology.hpp"

namespace fuzzysoft {

/// A fuzzy soft mapping f_up induced by u: X -> Y on elements and
/// p: E -> K on parameters. Both tables are total.
class FuzzySoftMapping {
 public:
  /// `element_map[x]` is u(x); `parameter_map[e]` is p(e).
  FuzzySoftMapping(UniversePtr source, UniversePtr target, std::vector<std::size_t> element_map,
                   std::vector<std::size_t> parameter_map);

  static FuzzySoftMapping identity(const UniversePtr& universe);

  const UniversePtr& source() const noexcept { return source_; }
  const UniversePtr& target() const noexcept { return target_; }
  const std::vector<std::size_t>& element_map() const noexcept { return u_; }
  const std::vector<std::size_t>& parameter_map() const noexcept { return p_; }

  bool injective() const;
  bool surjective() const;
  bool constant() const;

 private:
  UniversePtr source_;
  UniversePtr target_;
  std::vector<std::size_t> u_;
  std::vector<std::size_t> p_;
};

/// image(f)(k)(y) = max over x in u^-1(y), e in p^-1(k) of f(e)(x); 0 on empty fibres.
FuzzySoftSet image(const FuzzySoftMapping& m, const FuzzySoftSet& f);

/// preimage(g)(e)(x) = g(p(e))(u(x)).
FuzzySoftSet preimage(const FuzzySoftMapping& m, const FuzzySoftSet& g);

struct ContinuityVerdict {
  bool holds = true;
  /// First target open (canonical order) whose preimage is not open.
  std::optional<FuzzySoftSet> witness;
};

/// Preimages of all target opens must be source opens. Throws
/// GridIncompatible unless the source grid refines the target grid.
ContinuityVerdict is_continuous(const FuzzySoftMapping& m, const GradedSpace& source_space,
                                const GradedSpace& target_space);

/// Coarsest source topology (on the target's grid) making m continuous.
FuzzySoftTopology initial_topology(const FuzzySoftMapping& m, const GradedSpace& target_space);

/// Diagnostic form of the non-coincidence pullback: reports whether the
/// preimages of f and g are quasi-coincident. Never true when f and g are not.
bool preimage_preserves_nonq(const FuzzySoftMapping& m, const FuzzySoftSet& f, const FuzzySoftSet& g);

}  // namespace fuzzysoft
