#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzysoft {

/// Exact membership grade: a rational number in [0,1] kept in lowest terms.
///
/// Numerators and denominators are bounded by 2^31 so every cross product used
/// in comparisons fits in 64 bits.
class Grade {
 public:
  constexpr Grade() noexcept = default;

  /// Builds num/den reduced to lowest terms. Throws GradeError when den <= 0,
  /// when the value falls outside [0,1], or when den exceeds the 2^31 bound.
  Grade(std::int64_t num, std::int64_t den);

  static constexpr Grade zero() noexcept { return Grade{}; }
  static constexpr Grade one() noexcept { return Grade{Raw{}, 1, 1}; }

  /// Parses "k/d", "0" or "1". Decimal notation is rejected.
  static Grade parse(std::string_view text);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_one() const noexcept { return num_ == den_; }

  /// 1 - g. Already in lowest terms since gcd(d - n, d) = gcd(n, d).
  constexpr Grade complement() const noexcept { return Grade{Raw{}, den_ - num_, den_}; }

  /// "0", "1", or "n/d" in lowest terms.
  std::string str() const;

  friend constexpr bool operator==(const Grade&, const Grade&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Grade& a, const Grade& b) noexcept {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  struct Raw {};
  constexpr Grade(Raw, std::int64_t num, std::int64_t den) noexcept : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// True iff a + b > 1, decided exactly.
constexpr bool sum_exceeds_one(const Grade& a, const Grade& b) noexcept {
  return a.num() * b.den() + b.num() * a.den() > a.den() * b.den();
}

constexpr Grade min(const Grade& a, const Grade& b) noexcept { return b < a ? b : a; }
constexpr Grade max(const Grade& a, const Grade& b) noexcept { return a < b ? b : a; }

/// The finite quantifier domain {k/d : 0 <= k <= d}.
class GradeGrid {
 public:
  /// Throws ConfigError unless 2 <= denominator <= 2^20.
  explicit GradeGrid(std::int64_t denominator = 4);

  std::int64_t denominator() const noexcept { return d_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(d_) + 1; }

  bool contains(const Grade& g) const noexcept { return d_ % g.den() == 0; }

  /// k such that g = k/d. Throws OffGridError when g is not on the grid.
  std::int64_t index_of(const Grade& g) const;
  Grade at(std::int64_t k) const;

  /// All grid values in increasing order, 0 and 1 included.
  std::vector<Grade> values() const;
  /// Grid values strictly above 0: the admissible point heights.
  std::vector<Grade> positive_values() const;

  /// True when every value of `coarse` is a value of this grid.
  bool refines(const GradeGrid& coarse) const noexcept { return d_ % coarse.d_ == 0; }

  friend bool operator==(const GradeGrid&, const GradeGrid&) noexcept = default;

 private:
  std::int64_t d_;
};

}  // namespace fuzzysoft
