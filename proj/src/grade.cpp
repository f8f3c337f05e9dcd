#include "fuzzysoft/grade.hpp"

#include <charconv>
#include <numeric>

#include "fuzzysoft/errors.hpp"

namespace fuzzysoft {

namespace {

constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 31;

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last || text.front() == '+' || text.front() == '-') {
    throw GradeError("malformed grade \"" + std::string(whole) + "\" (expected k/d)");
  }
  return value;
}

}  // namespace

Grade::Grade(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw GradeError("grade denominator must be positive");
  if (den > kMaxDenominator) throw GradeError("grade denominator too large");
  if (num < 0 || num > den) {
    throw GradeError("grade " + std::to_string(num) + "/" + std::to_string(den) + " out of [0,1]");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Grade Grade::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const std::int64_t n = parse_integer(text, text);
    return Grade(n, 1);
  }
  const std::int64_t n = parse_integer(text.substr(0, slash), text);
  const std::int64_t d = parse_integer(text.substr(slash + 1), text);
  if (d == 0) throw GradeError("malformed grade \"" + std::string(text) + "\" (zero denominator)");
  return Grade(n, d);
}

std::string Grade::str() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

GradeGrid::GradeGrid(std::int64_t denominator) : d_(denominator) {
  if (d_ < 2 || d_ > (std::int64_t{1} << 20)) {
    throw ConfigError("grid denominator must lie in [2, 2^20], got " + std::to_string(d_));
  }
}

std::int64_t GradeGrid::index_of(const Grade& g) const {
  if (!contains(g)) {
    throw OffGridError("grade " + g.str() + " is not on the grid of denominator " + std::to_string(d_));
  }
  return g.num() * (d_ / g.den());
}

Grade GradeGrid::at(std::int64_t k) const { return Grade(k, d_); }

std::vector<Grade> GradeGrid::values() const {
  std::vector<Grade> out;
  out.reserve(size());
  for (std::int64_t k = 0; k <= d_; ++k) out.emplace_back(k, d_);
  return out;
}

std::vector<Grade> GradeGrid::positive_values() const {
  std::vector<Grade> out;
  out.reserve(static_cast<std::size_t>(d_));
  for (std::int64_t k = 1; k <= d_; ++k) out.emplace_back(k, d_);
  return out;
}

}  // namespace fuzzysoft
