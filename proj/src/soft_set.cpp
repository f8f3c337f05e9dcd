#include "fuzzysoft/soft_set.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fuzzysoft/errors.hpp"

namespace fuzzysoft {

namespace {

void require_unique_nonempty(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw Error(std::string("universe needs at least one ") + what);
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw Error(std::string("duplicate ") + what + " name \"" + n + "\"");
  }
}

std::optional<std::size_t> find_name(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

template <class Op>
FuzzySoftSet cellwise(const FuzzySoftSet& f, const FuzzySoftSet& g, Op op) {
  require_same_universe(f.universe(), g.universe());
  std::vector<Grade> out(f.grades().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f.cell(i), g.cell(i));
  return FuzzySoftSet(f.universe(), std::move(out));
}

}  // namespace

Universe::Universe(std::vector<std::string> elements, std::vector<std::string> parameters)
    : elements_(std::move(elements)), parameters_(std::move(parameters)) {
  require_unique_nonempty(elements_, "element");
  require_unique_nonempty(parameters_, "parameter");
}

std::optional<std::size_t> Universe::find_element(const std::string& name) const {
  return find_name(elements_, name);
}

std::optional<std::size_t> Universe::find_parameter(const std::string& name) const {
  return find_name(parameters_, name);
}

UniversePtr make_universe(std::vector<std::string> elements, std::vector<std::string> parameters) {
  return std::make_shared<const Universe>(std::move(elements), std::move(parameters));
}

UniversePtr make_indexed_universe(std::size_t elements, std::size_t parameters,
                                  const std::string& element_prefix,
                                  const std::string& parameter_prefix) {
  std::vector<std::string> xs, es;
  for (std::size_t i = 0; i < elements; ++i) xs.push_back(element_prefix + std::to_string(i));
  for (std::size_t i = 0; i < parameters; ++i) es.push_back(parameter_prefix + std::to_string(i));
  return make_universe(std::move(xs), std::move(es));
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw UniverseMismatch("operands live over different universes");
}

FuzzySoftSet::FuzzySoftSet(UniversePtr universe)
    : universe_(std::move(universe)), grades_(universe_->cell_count()) {}

FuzzySoftSet::FuzzySoftSet(UniversePtr universe, std::vector<Grade> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (grades_.size() != universe_->cell_count()) {
    throw Error("fuzzy soft set needs " + std::to_string(universe_->cell_count()) + " grades, got " +
                std::to_string(grades_.size()));
  }
}

FuzzySoftSet::FuzzySoftSet(UniversePtr universe, const std::vector<std::vector<Grade>>& rows)
    : universe_(std::move(universe)) {
  if (rows.size() != universe_->parameter_count()) {
    throw Error("fuzzy soft set needs one row per parameter");
  }
  grades_.reserve(universe_->cell_count());
  for (const auto& row : rows) {
    if (row.size() != universe_->element_count()) throw Error("fuzzy soft set row has wrong length");
    grades_.insert(grades_.end(), row.begin(), row.end());
  }
}

bool FuzzySoftSet::is_null() const noexcept {
  return std::all_of(grades_.begin(), grades_.end(), [](const Grade& g) { return g.is_zero(); });
}

bool FuzzySoftSet::is_universal() const noexcept {
  return std::all_of(grades_.begin(), grades_.end(), [](const Grade& g) { return g.is_one(); });
}

bool FuzzySoftSet::on_grid(const GradeGrid& grid) const noexcept {
  return std::all_of(grades_.begin(), grades_.end(), [&](const Grade& g) { return grid.contains(g); });
}

void FuzzySoftSet::require_on_grid(const GradeGrid& grid) const {
  for (std::size_t e = 0; e < universe_->parameter_count(); ++e) {
    for (std::size_t x = 0; x < universe_->element_count(); ++x) {
      if (!grid.contains(at(e, x))) {
        throw OffGridError("grade " + at(e, x).str() + " at (" + universe_->parameters()[e] + ", " +
                           universe_->elements()[x] + ") is not on the grid of denominator " +
                           std::to_string(grid.denominator()));
      }
    }
  }
}

std::string FuzzySoftSet::str() const {
  std::string out = "[";
  for (std::size_t e = 0; e < universe_->parameter_count(); ++e) {
    if (e) out += ';';
    for (std::size_t x = 0; x < universe_->element_count(); ++x) {
      if (x) out += ',';
      out += at(e, x).str();
    }
  }
  return out + "]";
}

bool operator==(const FuzzySoftSet& a, const FuzzySoftSet& b) {
  if (a.universe_ != b.universe_ && !(*a.universe_ == *b.universe_)) return false;
  return a.grades_ == b.grades_;
}

std::strong_ordering operator<=>(const FuzzySoftSet& a, const FuzzySoftSet& b) {
  return std::lexicographical_compare_three_way(a.grades_.begin(), a.grades_.end(), b.grades_.begin(),
                                                b.grades_.end());
}

FuzzySoftPoint::FuzzySoftPoint(UniversePtr universe, std::size_t parameter, std::size_t element, Grade alpha)
    : universe_(std::move(universe)), parameter_(parameter), element_(element), alpha_(alpha) {
  if (alpha_.is_zero()) throw GradeError("fuzzy soft point needs alpha > 0");
  if (parameter_ >= universe_->parameter_count() || element_ >= universe_->element_count()) {
    throw std::out_of_range("fuzzy soft point support outside the universe");
  }
}

FuzzySoftSet FuzzySoftPoint::as_set() const {
  std::vector<Grade> grades(universe_->cell_count());
  grades[cell()] = alpha_;
  return FuzzySoftSet(universe_, std::move(grades));
}

std::string FuzzySoftPoint::str() const {
  return universe_->parameters()[parameter_] + "_" + universe_->elements()[element_] + "^" + alpha_.str();
}

FuzzySoftSet null_set(const UniversePtr& universe) { return FuzzySoftSet(universe); }

FuzzySoftSet universal_set(const UniversePtr& universe) {
  return FuzzySoftSet(universe, std::vector<Grade>(universe->cell_count(), Grade::one()));
}

bool subset(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  require_same_universe(f.universe(), g.universe());
  for (std::size_t i = 0; i < f.grades().size(); ++i) {
    if (g.cell(i) < f.cell(i)) return false;
  }
  return true;
}

FuzzySoftSet unite(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return cellwise(f, g, [](const Grade& a, const Grade& b) { return max(a, b); });
}

FuzzySoftSet intersect(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  return cellwise(f, g, [](const Grade& a, const Grade& b) { return min(a, b); });
}

FuzzySoftSet complement(const FuzzySoftSet& f) {
  std::vector<Grade> out;
  out.reserve(f.grades().size());
  for (const auto& g : f.grades()) out.push_back(g.complement());
  return FuzzySoftSet(f.universe(), std::move(out));
}

bool quasi_coincident(const FuzzySoftSet& f, const FuzzySoftSet& g) {
  require_same_universe(f.universe(), g.universe());
  for (std::size_t i = 0; i < f.grades().size(); ++i) {
    if (sum_exceeds_one(f.cell(i), g.cell(i))) return true;
  }
  return false;
}

bool quasi_coincident(const FuzzySoftPoint& p, const FuzzySoftSet& f) {
  require_same_universe(p.universe(), f.universe());
  return sum_exceeds_one(p.alpha(), f.cell(p.cell()));
}

bool quasi_coincident(const FuzzySoftSet& f, const FuzzySoftPoint& p) { return quasi_coincident(p, f); }

bool quasi_coincident(const FuzzySoftPoint& p, const FuzzySoftPoint& r) {
  require_same_universe(p.universe(), r.universe());
  return p.same_support(r) && sum_exceeds_one(p.alpha(), r.alpha());
}

bool point_belongs(const FuzzySoftPoint& p, const FuzzySoftSet& f) {
  require_same_universe(p.universe(), f.universe());
  return p.alpha() <= f.cell(p.cell());
}

std::optional<std::size_t> single_parameter(const FuzzySoftSet& f) {
  const auto& u = *f.universe();
  std::optional<std::size_t> found;
  for (std::size_t e = 0; e < u.parameter_count(); ++e) {
    bool nonzero = false;
    for (std::size_t x = 0; x < u.element_count() && !nonzero; ++x) nonzero = !f.at(e, x).is_zero();
    if (!nonzero) continue;
    if (found) return std::nullopt;
    found = e;
  }
  return found;
}

std::vector<FuzzySoftPoint> grid_points_of(const FuzzySoftSet& f, const GradeGrid& grid) {
  f.require_on_grid(grid);
  const auto& u = *f.universe();
  std::vector<FuzzySoftPoint> out;
  for (std::size_t e = 0; e < u.parameter_count(); ++e) {
    for (std::size_t x = 0; x < u.element_count(); ++x) {
      const std::int64_t top = grid.index_of(f.at(e, x));
      for (std::int64_t k = 1; k <= top; ++k) out.emplace_back(f.universe(), e, x, grid.at(k));
    }
  }
  return out;
}

std::vector<FuzzySoftPoint> all_grid_points(const UniversePtr& universe, const GradeGrid& grid) {
  return grid_points_of(universal_set(universe), grid);
}

}  // namespace fuzzysoft
