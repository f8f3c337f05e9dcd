#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysoft/soft_set.hpp"
#include "fuzzysoft/topology.hpp"

namespace fuzzysoft {

/// The separation axioms decided by this library. The MD_* family follows the
/// Mahanta-Das set-based definitions; the Q_* family is built on
/// quasi-coincidence between fuzzy soft points.
enum class Axiom {
  kMdT0,
  kMdT1,
  kMdT2,
  kMdRegular,
  kMdT3,
  kMdNormal,
  kMdT4,
  kQT0,
  kQT1,
  kQT2,
  kQRegular,
  kQT3,
};

inline constexpr std::array<Axiom, 12> kAllAxioms = {
    Axiom::kMdT0,     Axiom::kMdT1, Axiom::kMdT2, Axiom::kMdRegular, Axiom::kMdT3, Axiom::kMdNormal,
    Axiom::kMdT4,     Axiom::kQT0,  Axiom::kQT1,  Axiom::kQT2,       Axiom::kQRegular, Axiom::kQT3,
};

/// "MD_T0", ..., "Q_T3".
std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom_name(std::string_view name);
bool is_md_axiom(Axiom axiom);

/// Concrete data showing why a clause fails.
///
/// `check` names the clause family that failed (an axiom name, or an oracle
/// name such as "ORACLE_Q_T0_CLOSURE"); conjunctive axioms report the failing
/// component. Points and sets are stored in the order the clause consumes them.
struct Witness {
  std::string check;
  std::string clause;
  std::string case_tag;
  std::vector<FuzzySoftPoint> points;
  std::vector<FuzzySoftSet> sets;

  std::string describe() const;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
};

struct CheckOptions {
  /// Read N(p1) in the distinct-support clause of q-T0/q-T1 as the open
  /// neighbourhoods of the height-1 point on the same support.
  bool unit_height_nbds = false;
};

Verdict check_q_t0(const GradedSpace& space, const CheckOptions& options = {});
Verdict check_q_t1(const GradedSpace& space, const CheckOptions& options = {});
Verdict check_q_t2(const GradedSpace& space);
Verdict check_q_regular(const GradedSpace& space);
/// Throws std::invalid_argument for a Q_* name.
Verdict check_md(const GradedSpace& space, Axiom axiom);
/// Dispatches to the checker for `axiom`; Q_T3 is Q_REGULAR and Q_T1.
Verdict check(const GradedSpace& space, Axiom axiom, const CheckOptions& options = {});

/// Holds iff no two distinct grid points each lie in the other's closure.
Verdict oracle_q_t0_closure(const GradedSpace& space);
/// Holds iff every grid point is a closed set.
Verdict oracle_q_t1_points_closed(const GradedSpace& space);
/// Meet of the closures of the open sets containing p.
FuzzySoftSet closure_meet(const GradedSpace& space, const FuzzySoftPoint& p);
/// Holds iff closure_meet(p) equals p for every grid point p.
Verdict oracle_q_t2_closure_meet(const GradedSpace& space);
/// Holds iff every open g with p q g contains the closure of some open f with p q f.
Verdict oracle_q_regular_refinement(const GradedSpace& space);

/// Re-evaluates the clause recorded in `witness`; true means the clause holds.
/// A witness taken from a failing verdict must replay to false.
bool replay_clause(const GradedSpace& space, const Witness& witness, const CheckOptions& options = {});

/// Every grid set with exactly one nonzero parameter row, in canonical order.
std::vector<FuzzySoftSet> single_parameter_grid_sets(const UniversePtr& universe, const GradeGrid& grid);

}  // namespace fuzzysoft
