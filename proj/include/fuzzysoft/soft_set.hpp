#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fuzzysoft/grade.hpp"

namespace fuzzysoft {

/// Element names X and parameter names E. Both nonempty, names unique per list.
class Universe {
 public:
  Universe(std::vector<std::string> elements, std::vector<std::string> parameters);

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }

  std::size_t element_count() const noexcept { return elements_.size(); }
  std::size_t parameter_count() const noexcept { return parameters_.size(); }
  std::size_t cell_count() const noexcept { return elements_.size() * parameters_.size(); }

  /// Row-major cell index: parameter first, then element.
  std::size_t cell(std::size_t parameter, std::size_t element) const noexcept {
    return parameter * elements_.size() + element;
  }

  std::optional<std::size_t> find_element(const std::string& name) const;
  std::optional<std::size_t> find_parameter(const std::string& name) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::string> parameters_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> elements, std::vector<std::string> parameters);

/// Universe with elements x0..x{n-1} and parameters e0..e{m-1}.
UniversePtr make_indexed_universe(std::size_t elements, std::size_t parameters,
                                  const std::string& element_prefix = "x",
                                  const std::string& parameter_prefix = "e");

/// Throws UniverseMismatch unless both pointers denote equal universes.
void require_same_universe(const UniversePtr& a, const UniversePtr& b);

/// A fuzzy soft set as a total |E| x |X| matrix of grades.
///
/// Parameters outside the support carry the all-zero row, so the parameter
/// subset A of the textbook notation is implicit.
class FuzzySoftSet {
 public:
  /// All-zero set over `universe`.
  explicit FuzzySoftSet(UniversePtr universe);
  /// Grades in row-major order (parameter, then element).
  FuzzySoftSet(UniversePtr universe, std::vector<Grade> grades);
  /// One row per parameter, one column per element.
  FuzzySoftSet(UniversePtr universe, const std::vector<std::vector<Grade>>& rows);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<Grade>& grades() const noexcept { return grades_; }

  const Grade& at(std::size_t parameter, std::size_t element) const {
    return grades_[universe_->cell(parameter, element)];
  }
  const Grade& cell(std::size_t index) const { return grades_[index]; }

  bool is_null() const noexcept;
  bool is_universal() const noexcept;
  bool on_grid(const GradeGrid& grid) const noexcept;
  /// Throws OffGridError naming the first offending cell.
  void require_on_grid(const GradeGrid& grid) const;

  /// "[1/2,0]" for one parameter; rows joined by ';' otherwise: "[1,0;0,1/2]".
  std::string str() const;

  /// Equality is cell-wise; universes must agree by value.
  friend bool operator==(const FuzzySoftSet& a, const FuzzySoftSet& b);
  /// Canonical order: lexicographic over the row-major grade vector.
  friend std::strong_ordering operator<=>(const FuzzySoftSet& a, const FuzzySoftSet& b);

 private:
  UniversePtr universe_;
  std::vector<Grade> grades_;
};

/// A fuzzy soft point e_x^alpha: a single nonzero grade alpha at (e, x).
class FuzzySoftPoint {
 public:
  /// Throws GradeError when alpha is 0, std::out_of_range for bad indices.
  FuzzySoftPoint(UniversePtr universe, std::size_t parameter, std::size_t element, Grade alpha);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t parameter() const noexcept { return parameter_; }
  std::size_t element() const noexcept { return element_; }
  std::size_t cell() const noexcept { return universe_->cell(parameter_, element_); }
  const Grade& alpha() const noexcept { return alpha_; }

  bool same_support(const FuzzySoftPoint& other) const noexcept { return cell() == other.cell(); }
  FuzzySoftPoint with_alpha(Grade alpha) const { return {universe_, parameter_, element_, alpha}; }

  FuzzySoftSet as_set() const;
  operator FuzzySoftSet() const { return as_set(); }  // NOLINT(google-explicit-constructor)

  /// "e_x^1/2" using the universe's names.
  std::string str() const;

  friend bool operator==(const FuzzySoftPoint& a, const FuzzySoftPoint& b) noexcept {
    return a.cell() == b.cell() && a.alpha_ == b.alpha_;
  }
  /// Ordered by cell, then by alpha.
  friend std::strong_ordering operator<=>(const FuzzySoftPoint& a, const FuzzySoftPoint& b) noexcept {
    if (auto c = a.cell() <=> b.cell(); c != 0) return c;
    return a.alpha_ <=> b.alpha_;
  }

 private:
  UniversePtr universe_;
  std::size_t parameter_;
  std::size_t element_;
  Grade alpha_;
};

FuzzySoftSet null_set(const UniversePtr& universe);
FuzzySoftSet universal_set(const UniversePtr& universe);

bool subset(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet unite(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet intersect(const FuzzySoftSet& f, const FuzzySoftSet& g);
FuzzySoftSet complement(const FuzzySoftSet& f);

/// f q g: some cell has f + g > 1.
bool quasi_coincident(const FuzzySoftSet& f, const FuzzySoftSet& g);
bool quasi_coincident(const FuzzySoftPoint& p, const FuzzySoftSet& f);
bool quasi_coincident(const FuzzySoftSet& f, const FuzzySoftPoint& p);
bool quasi_coincident(const FuzzySoftPoint& p, const FuzzySoftPoint& r);

/// p belongs to f: alpha <= f(e)(x).
bool point_belongs(const FuzzySoftPoint& p, const FuzzySoftSet& f);

/// The parameter e when f is nonzero exactly on row e; nullopt otherwise.
std::optional<std::size_t> single_parameter(const FuzzySoftSet& f);

/// Every grid point belonging to f, in point order. Throws OffGridError
/// when f has an off-grid grade.
std::vector<FuzzySoftPoint> grid_points_of(const FuzzySoftSet& f, const GradeGrid& grid);

/// All points with grid heights over every cell of `universe`, in point order.
std::vector<FuzzySoftPoint> all_grid_points(const UniversePtr& universe, const GradeGrid& grid);

}  // namespace fuzzysoft
