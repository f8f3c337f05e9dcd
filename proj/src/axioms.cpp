#include "fuzzysoft/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzysoft {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "MD_T0", "MD_T1", "MD_T2", "MD_REGULAR", "MD_T3", "MD_NORMAL",
    "MD_T4", "Q_T0",  "Q_T1",  "Q_T2",       "Q_REGULAR", "Q_T3",
};

constexpr const char* kDistinct = "distinct-support";
constexpr const char* kSame = "same-support";

Verdict fail(Witness w) { return Verdict{false, std::move(w)}; }

Witness point_pair_witness(std::string check, std::string clause, const char* tag, const FuzzySoftPoint& p1,
                           const FuzzySoftPoint& p2) {
  return Witness{std::move(check), std::move(clause), tag, {p1, p2}, {}};
}

/// Pairwise relations between opens, computed once per check.
class OpenRelations {
 public:
  explicit OpenRelations(const GradedSpace& space) : opens_(space.opens()), n_(opens_.size()) {
    nonq_.assign(n_ * n_, false);
    disjoint_.assign(n_ * n_, false);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        const bool nq = !quasi_coincident(opens_[i], opens_[j]);
        const bool dj = intersect(opens_[i], opens_[j]).is_null();
        nonq_[i * n_ + j] = nonq_[j * n_ + i] = nq;
        disjoint_[i * n_ + j] = disjoint_[j * n_ + i] = dj;
      }
    }
  }

  std::size_t size() const { return n_; }
  const FuzzySoftSet& open(std::size_t i) const { return opens_[i]; }
  bool nonq(std::size_t i, std::size_t j) const { return nonq_[i * n_ + j]; }
  bool disjoint(std::size_t i, std::size_t j) const { return disjoint_[i * n_ + j]; }

  template <class Pred>
  std::vector<std::size_t> select(Pred pred) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (pred(opens_[i])) out.push_back(i);
    }
    return out;
  }

  /// Some i in `left` and j in `right` with rel(i, j).
  template <class Rel>
  static bool any_pair(const std::vector<std::size_t>& left, const std::vector<std::size_t>& right, Rel rel) {
    for (auto i : left) {
      for (auto j : right) {
        if (rel(i, j)) return true;
      }
    }
    return false;
  }

 private:
  const std::vector<FuzzySoftSet>& opens_;
  std::size_t n_;
  std::vector<bool> nonq_;
  std::vector<bool> disjoint_;
};

// ---- q-family clauses ------------------------------------------------------

bool exists_nbd_avoiding(const GradedSpace& space, const FuzzySoftPoint& holder, const FuzzySoftPoint& avoided) {
  return std::any_of(space.opens().begin(), space.opens().end(), [&](const FuzzySoftSet& f) {
    return point_belongs(holder, f) && !quasi_coincident(avoided, f);
  });
}

FuzzySoftPoint nbd_anchor(const FuzzySoftPoint& p, const CheckOptions& options) {
  return options.unit_height_nbds ? p.with_alpha(Grade::one()) : p;
}

bool q_t0_distinct(const GradedSpace& space, const FuzzySoftPoint& p1, const FuzzySoftPoint& p2,
                   const CheckOptions& options) {
  return exists_nbd_avoiding(space, nbd_anchor(p1, options), p2) ||
         exists_nbd_avoiding(space, nbd_anchor(p2, options), p1);
}

bool q_t1_distinct(const GradedSpace& space, const FuzzySoftPoint& p1, const FuzzySoftPoint& p2,
                   const CheckOptions& options) {
  return exists_nbd_avoiding(space, nbd_anchor(p1, options), p2) &&
         exists_nbd_avoiding(space, nbd_anchor(p2, options), p1);
}

/// lo, hi share a support and lo's height is smaller: some open f has hi q f, lo not q f.
bool q_same_support(const GradedSpace& space, const FuzzySoftPoint& lo, const FuzzySoftPoint& hi) {
  return std::any_of(space.opens().begin(), space.opens().end(), [&](const FuzzySoftSet& f) {
    return quasi_coincident(hi, f) && !quasi_coincident(lo, f);
  });
}

bool q_t2_distinct(const OpenRelations& rel, const FuzzySoftPoint& p1, const FuzzySoftPoint& p2) {
  auto left = rel.select([&](const FuzzySoftSet& f) { return point_belongs(p1, f); });
  auto right = rel.select([&](const FuzzySoftSet& g) { return point_belongs(p2, g); });
  return OpenRelations::any_pair(left, right, [&](auto i, auto j) { return rel.nonq(i, j); });
}

bool q_t2_same(const OpenRelations& rel, const FuzzySoftPoint& lo, const FuzzySoftPoint& hi) {
  auto left = rel.select([&](const FuzzySoftSet& f) { return point_belongs(lo, f); });
  auto right = rel.select([&](const FuzzySoftSet& g) { return quasi_coincident(hi, g); });
  return OpenRelations::any_pair(left, right, [&](auto i, auto j) { return rel.nonq(i, j); });
}

/// Requires p not in h. Case I applies when h vanishes on p's support.
bool q_regular_clause(const OpenRelations& rel, const FuzzySoftSet& h, const FuzzySoftPoint& p) {
  const bool case_one = h.cell(p.cell()).is_zero();
  auto left = rel.select([&](const FuzzySoftSet& f) {
    return case_one ? point_belongs(p, f) : quasi_coincident(p, f);
  });
  auto right = rel.select([&](const FuzzySoftSet& g) { return subset(h, g); });
  return OpenRelations::any_pair(left, right, [&](auto i, auto j) { return rel.nonq(i, j); });
}

const char* q_regular_case(const FuzzySoftSet& h, const FuzzySoftPoint& p) {
  return h.cell(p.cell()).is_zero() ? "case I" : "case II";
}

// ---- MD-family clauses -----------------------------------------------------
// Membership of a set in an open reads as inclusion; "disjoint" means the
// meet is null.

bool md_t0_clause(const OpenRelations& rel, const FuzzySoftSet& a, const FuzzySoftSet& b) {
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const bool has_a = subset(a, rel.open(i));
    const bool has_b = subset(b, rel.open(i));
    if (has_a != has_b) return true;
  }
  return false;
}

bool md_t1_clause(const OpenRelations& rel, const FuzzySoftSet& a, const FuzzySoftSet& b) {
  auto s = rel.select([&](const FuzzySoftSet& o) { return subset(a, o) && !subset(b, o); });
  auto h = rel.select([&](const FuzzySoftSet& o) { return subset(b, o) && !subset(a, o); });
  return !s.empty() && !h.empty();
}

bool md_t2_clause(const OpenRelations& rel, const FuzzySoftSet& a, const FuzzySoftSet& b) {
  auto s = rel.select([&](const FuzzySoftSet& o) { return subset(a, o) && !subset(b, o); });
  auto h = rel.select([&](const FuzzySoftSet& o) { return subset(b, o) && !subset(a, o); });
  return OpenRelations::any_pair(s, h, [&](auto i, auto j) { return rel.disjoint(i, j); });
}

/// Separates two sets by disjoint open supersets; shared by regular and normal.
bool md_disjoint_supersets(const OpenRelations& rel, const FuzzySoftSet& a, const FuzzySoftSet& k) {
  auto g1 = rel.select([&](const FuzzySoftSet& o) { return subset(a, o); });
  auto g2 = rel.select([&](const FuzzySoftSet& o) { return subset(k, o); });
  return OpenRelations::any_pair(g1, g2, [&](auto i, auto j) { return rel.disjoint(i, j); });
}

template <class Clause>
Verdict md_pair_scan(const GradedSpace& space, const char* name, Clause clause) {
  OpenRelations rel(space);
  const auto candidates = single_parameter_grid_sets(space.universe(), space.grid());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!intersect(candidates[i], candidates[j]).is_null()) continue;
      if (!clause(rel, candidates[i], candidates[j])) {
        return fail(Witness{name, "separation", "", {}, {candidates[i], candidates[j]}});
      }
    }
  }
  return {};
}

Verdict md_regular(const GradedSpace& space) {
  OpenRelations rel(space);
  for (const auto& a : single_parameter_grid_sets(space.universe(), space.grid())) {
    for (const auto& k : space.closed_sets()) {
      // "k not containing a" is read like the T0-T2 pairs: the meet is null.
      if (!intersect(a, k).is_null()) continue;
      if (!md_disjoint_supersets(rel, a, k)) return fail(Witness{"MD_REGULAR", "separation", "", {}, {a, k}});
    }
  }
  return {};
}

Verdict md_normal(const GradedSpace& space) {
  OpenRelations rel(space);
  const auto& closed = space.closed_sets();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i; j < closed.size(); ++j) {
      if (!intersect(closed[i], closed[j]).is_null()) continue;
      if (!md_disjoint_supersets(rel, closed[i], closed[j])) {
        return fail(Witness{"MD_NORMAL", "separation", "", {}, {closed[i], closed[j]}});
      }
    }
  }
  return {};
}

Verdict conjunction(const Verdict& first, const Verdict& second) { return first.holds ? second : first; }

/// Scans unordered point pairs; same-support pairs arrive with the lower point first.
template <class Distinct, class Same>
Verdict point_pair_scan(const GradedSpace& space, const char* name, Distinct distinct, Same same) {
  const auto& pts = space.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].same_support(pts[j])) {
        if (!same(pts[i], pts[j])) return fail(point_pair_witness(name, "b", kSame, pts[i], pts[j]));
      } else if (!distinct(pts[i], pts[j])) {
        return fail(point_pair_witness(name, "a", kDistinct, pts[i], pts[j]));
      }
    }
  }
  return {};
}

bool mutual_closure_clause(const GradedSpace& space, const FuzzySoftPoint& p1, const FuzzySoftPoint& p2) {
  return !point_belongs(p1, closure(space, p2)) || !point_belongs(p2, closure(space, p1));
}

bool refinement_clause(const GradedSpace& space, const FuzzySoftPoint& p, const FuzzySoftSet& g) {
  return std::any_of(space.opens().begin(), space.opens().end(), [&](const FuzzySoftSet& f) {
    return quasi_coincident(p, f) && subset(closure(space, f), g);
  });
}

}  // namespace

std::string_view axiom_name(Axiom axiom) { return kNames[static_cast<std::size_t>(axiom)]; }

std::optional<Axiom> parse_axiom_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllAxioms[i];
  }
  return std::nullopt;
}

bool is_md_axiom(Axiom axiom) { return axiom_name(axiom).substr(0, 3) == "MD_"; }

std::string Witness::describe() const {
  std::string out = check + " fails";
  out += " [";
  if (!case_tag.empty()) out += case_tag + ", ";
  out += "clause " + clause + "]";
  if (!points.empty()) {
    out += " points";
    for (const auto& p : points) out += " " + p.str();
  }
  if (!sets.empty()) {
    out += " sets";
    for (const auto& s : sets) out += " " + s.str();
  }
  return out;
}

Verdict check_q_t0(const GradedSpace& space, const CheckOptions& options) {
  return point_pair_scan(
      space, "Q_T0", [&](const auto& p1, const auto& p2) { return q_t0_distinct(space, p1, p2, options); },
      [&](const auto& lo, const auto& hi) { return q_same_support(space, lo, hi); });
}

Verdict check_q_t1(const GradedSpace& space, const CheckOptions& options) {
  return point_pair_scan(
      space, "Q_T1", [&](const auto& p1, const auto& p2) { return q_t1_distinct(space, p1, p2, options); },
      [&](const auto& lo, const auto& hi) { return q_same_support(space, lo, hi); });
}

Verdict check_q_t2(const GradedSpace& space) {
  OpenRelations rel(space);
  return point_pair_scan(
      space, "Q_T2", [&](const auto& p1, const auto& p2) { return q_t2_distinct(rel, p1, p2); },
      [&](const auto& lo, const auto& hi) { return q_t2_same(rel, lo, hi); });
}

Verdict check_q_regular(const GradedSpace& space) {
  OpenRelations rel(space);
  for (const auto& h : space.closed_sets()) {
    for (const auto& p : space.points()) {
      if (point_belongs(p, h)) continue;
      if (!q_regular_clause(rel, h, p)) return fail(Witness{"Q_REGULAR", q_regular_case(h, p), "", {p}, {h}});
    }
  }
  return {};
}

Verdict check_md(const GradedSpace& space, Axiom axiom) {
  switch (axiom) {
    case Axiom::kMdT0:
      return md_pair_scan(space, "MD_T0", md_t0_clause);
    case Axiom::kMdT1:
      return md_pair_scan(space, "MD_T1", md_t1_clause);
    case Axiom::kMdT2:
      return md_pair_scan(space, "MD_T2", md_t2_clause);
    case Axiom::kMdRegular:
      return md_regular(space);
    case Axiom::kMdT3:
      return conjunction(md_regular(space), check_md(space, Axiom::kMdT1));
    case Axiom::kMdNormal:
      return md_normal(space);
    case Axiom::kMdT4:
      return conjunction(md_normal(space), check_md(space, Axiom::kMdT1));
    default:
      throw std::invalid_argument("check_md called with " + std::string(axiom_name(axiom)));
  }
}

Verdict check(const GradedSpace& space, Axiom axiom, const CheckOptions& options) {
  switch (axiom) {
    case Axiom::kQT0:
      return check_q_t0(space, options);
    case Axiom::kQT1:
      return check_q_t1(space, options);
    case Axiom::kQT2:
      return check_q_t2(space);
    case Axiom::kQRegular:
      return check_q_regular(space);
    case Axiom::kQT3:
      return conjunction(check_q_regular(space), check_q_t1(space, options));
    default:
      return check_md(space, axiom);
  }
}

Verdict oracle_q_t0_closure(const GradedSpace& space) {
  const auto& pts = space.points();
  std::vector<FuzzySoftSet> closures;
  closures.reserve(pts.size());
  for (const auto& p : pts) closures.push_back(closure(space, p));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (point_belongs(pts[i], closures[j]) && point_belongs(pts[j], closures[i])) {
        return fail(point_pair_witness("ORACLE_Q_T0_CLOSURE", "mutual-closure",
                                       pts[i].same_support(pts[j]) ? kSame : kDistinct, pts[i], pts[j]));
      }
    }
  }
  return {};
}

Verdict oracle_q_t1_points_closed(const GradedSpace& space) {
  for (const auto& p : space.points()) {
    if (!is_closed(space, p)) return fail(Witness{"ORACLE_Q_T1_POINTS_CLOSED", "point-closed", "", {p}, {}});
  }
  return {};
}

FuzzySoftSet closure_meet(const GradedSpace& space, const FuzzySoftPoint& p) {
  FuzzySoftSet meet = universal_set(space.universe());
  for (const auto& f : open_nbds(space, p)) meet = intersect(meet, closure(space, f));
  return meet;
}

Verdict oracle_q_t2_closure_meet(const GradedSpace& space) {
  for (const auto& p : space.points()) {
    auto meet = closure_meet(space, p);
    if (!(meet == p.as_set())) {
      return fail(Witness{"ORACLE_Q_T2_CLOSURE_MEET", "closure-meet", "", {p}, {meet}});
    }
  }
  return {};
}

Verdict oracle_q_regular_refinement(const GradedSpace& space) {
  for (const auto& p : space.points()) {
    for (const auto& g : space.opens()) {
      if (!quasi_coincident(p, g)) continue;
      if (!refinement_clause(space, p, g)) {
        return fail(Witness{"ORACLE_Q_REGULAR_REFINEMENT", "refinement", "", {p}, {g}});
      }
    }
  }
  return {};
}

bool replay_clause(const GradedSpace& space, const Witness& w, const CheckOptions& options) {
  auto need = [&](std::size_t points, std::size_t sets) {
    if (w.points.size() != points || w.sets.size() != sets) {
      throw std::invalid_argument("witness for " + w.check + " has the wrong shape");
    }
  };
  const bool same = w.case_tag == kSame;
  if (w.check == "Q_T0" || w.check == "Q_T1" || w.check == "Q_T2") {
    need(2, 0);
    const auto& p1 = w.points[0];
    const auto& p2 = w.points[1];
    if (w.check == "Q_T2") {
      OpenRelations rel(space);
      return same ? q_t2_same(rel, p1, p2) : q_t2_distinct(rel, p1, p2);
    }
    if (same) return q_same_support(space, p1, p2);
    return w.check == "Q_T0" ? q_t0_distinct(space, p1, p2, options) : q_t1_distinct(space, p1, p2, options);
  }
  if (w.check == "Q_REGULAR") {
    need(1, 1);
    if (point_belongs(w.points[0], w.sets[0])) return true;
    return q_regular_clause(OpenRelations(space), w.sets[0], w.points[0]);
  }
  if (w.check == "MD_T0" || w.check == "MD_T1" || w.check == "MD_T2") {
    need(0, 2);
    OpenRelations rel(space);
    if (!intersect(w.sets[0], w.sets[1]).is_null()) return true;
    if (w.check == "MD_T0") return md_t0_clause(rel, w.sets[0], w.sets[1]);
    if (w.check == "MD_T1") return md_t1_clause(rel, w.sets[0], w.sets[1]);
    return md_t2_clause(rel, w.sets[0], w.sets[1]);
  }
  if (w.check == "MD_REGULAR") {
    need(0, 2);
    if (!intersect(w.sets[0], w.sets[1]).is_null()) return true;
    return md_disjoint_supersets(OpenRelations(space), w.sets[0], w.sets[1]);
  }
  if (w.check == "MD_NORMAL") {
    need(0, 2);
    if (!intersect(w.sets[0], w.sets[1]).is_null()) return true;
    return md_disjoint_supersets(OpenRelations(space), w.sets[0], w.sets[1]);
  }
  if (w.check == "ORACLE_Q_T0_CLOSURE") {
    need(2, 0);
    return mutual_closure_clause(space, w.points[0], w.points[1]);
  }
  if (w.check == "ORACLE_Q_T1_POINTS_CLOSED") {
    need(1, 0);
    return is_closed(space, w.points[0]);
  }
  if (w.check == "ORACLE_Q_T2_CLOSURE_MEET") {
    need(1, 1);
    return closure_meet(space, w.points[0]) == w.points[0].as_set();
  }
  if (w.check == "ORACLE_Q_REGULAR_REFINEMENT") {
    need(1, 1);
    if (!quasi_coincident(w.points[0], w.sets[0])) return true;
    return refinement_clause(space, w.points[0], w.sets[0]);
  }
  throw std::invalid_argument("unknown witness check " + w.check);
}

std::vector<FuzzySoftSet> single_parameter_grid_sets(const UniversePtr& universe, const GradeGrid& grid) {
  std::vector<FuzzySoftSet> out;
  for (auto& f : all_grid_sets(universe, grid)) {
    if (single_parameter(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace fuzzysoft
