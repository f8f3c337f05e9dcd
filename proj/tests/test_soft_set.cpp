#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fuzzysoft/errors.hpp"
#include "fuzzysoft/soft_set.hpp"

using namespace fuzzysoft;

namespace {

const UniversePtr kXY = make_universe({"x", "y"}, {"e"});

FuzzySoftSet row(const char* a, const char* b) { return FuzzySoftSet(kXY, std::vector<Grade>{Grade::parse(a), Grade::parse(b)}); }

// Grid sets as integer numerators over d; the oracle works on these directly.
std::vector<int> numerators(const FuzzySoftSet& f, int d) {
  std::vector<int> out;
  for (const auto& g : f.grades()) out.push_back(static_cast<int>(g.num() * d / g.den()));
  return out;
}

FuzzySoftSet random_set(std::mt19937_64& rng, const UniversePtr& u, int d) {
  std::vector<Grade> grades;
  for (std::size_t i = 0; i < u->cell_count(); ++i) grades.emplace_back(static_cast<std::int64_t>(rng() % (d + 1)), d);
  return FuzzySoftSet(u, grades);
}

}  // namespace

TEST_CASE("universe validation") {
  CHECK_THROWS(make_universe({}, {"e"}));
  CHECK_THROWS(make_universe({"x"}, {}));
  CHECK_THROWS(make_universe({"x", "x"}, {"e"}));
  CHECK_THROWS(make_universe({"x"}, {"e", "e"}));
  auto u = make_indexed_universe(3, 2);
  CHECK(u->elements()[2] == "x2");
  CHECK(u->parameters()[1] == "e1");
  CHECK(u->cell(1, 2) == 5);
  CHECK(u->find_element("x1") == 1u);
  CHECK_FALSE(u->find_parameter("nope").has_value());
}

TEST_CASE("extremes") {
  CHECK(null_set(kXY) == row("0", "0"));
  CHECK(universal_set(kXY) == row("1", "1"));
  CHECK(complement(null_set(kXY)) == universal_set(kXY));
  CHECK(null_set(kXY).is_null());
  CHECK(universal_set(kXY).is_universal());
}

TEST_CASE("subset") {
  CHECK(subset(row("1/2", "0"), row("1", "1/2")));
  CHECK_FALSE(subset(row("1", "0"), row("1/2", "1")));
  CHECK(subset(row("1/2", "1/2"), row("1/2", "1/2")));
}

TEST_CASE("union, intersection, complement") {
  CHECK(unite(row("1/2", "0"), row("0", "1")) == row("1/2", "1"));
  CHECK(intersect(row("1/2", "0"), row("1", "0")) == row("1/2", "0"));
  CHECK(complement(row("1/4", "1")) == row("3/4", "0"));
  CHECK(row("1/2", "0").str() == "[1/2,0]");
}

TEST_CASE("operations reject mixed universes") {
  auto other = make_universe({"a", "b"}, {"e"});
  FuzzySoftSet f(other);
  CHECK_THROWS_AS(unite(row("0", "0"), f), UniverseMismatch);
  CHECK_THROWS_AS(subset(row("0", "0"), f), UniverseMismatch);
  CHECK_THROWS_AS(quasi_coincident(row("0", "0"), f), UniverseMismatch);
  // Equal universes built separately are compatible.
  auto same = make_universe({"x", "y"}, {"e"});
  CHECK(unite(row("1", "0"), FuzzySoftSet(same)) == row("1", "0"));
}

TEST_CASE("quasi-coincidence") {
  auto u = make_universe({"x"}, {"e"});
  FuzzySoftSet half(u, {Grade(1, 2)}), one(u, {Grade::one()});
  CHECK_FALSE(quasi_coincident(half, half));
  CHECK(quasi_coincident(one, half));
  CHECK_FALSE(quasi_coincident(row("1", "1/2"), complement(row("1", "1/2"))));
}

TEST_CASE("points") {
  FuzzySoftPoint p(kXY, 0, 0, Grade(1, 2));
  CHECK(point_belongs(p, row("1/2", "0")));
  CHECK_FALSE(point_belongs(p.with_alpha(Grade::one()), row("1/2", "0")));
  CHECK(point_belongs(p, universal_set(kXY)));
  CHECK(p.as_set() == row("1/2", "0"));
  CHECK(p.str() == "e_x^1/2");
  CHECK_THROWS_AS(FuzzySoftPoint(kXY, 0, 0, Grade::zero()), GradeError);
  CHECK(quasi_coincident(p, row("3/4", "0")));
  CHECK_FALSE(quasi_coincident(p, row("1/2", "1")));
  CHECK(FuzzySoftPoint(kXY, 0, 0, Grade(1, 2)) < FuzzySoftPoint(kXY, 0, 0, Grade::one()));
  CHECK(FuzzySoftPoint(kXY, 0, 0, Grade::one()) < FuzzySoftPoint(kXY, 0, 1, Grade(1, 2)));
}

TEST_CASE("single parameter sets") {
  auto u = make_universe({"x"}, {"e1", "e2"});
  CHECK(single_parameter(FuzzySoftSet(u, std::vector<std::vector<Grade>>{{Grade(1, 2)}, {Grade::zero()}})) == 0u);
  CHECK_FALSE(single_parameter(null_set(u)).has_value());
  CHECK_FALSE(single_parameter(universal_set(u)).has_value());
}

TEST_CASE("grid points of a set") {
  GradeGrid d2(2);
  auto pts = grid_points_of(row("1/2", "0"), d2);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == FuzzySoftPoint(kXY, 0, 0, Grade(1, 2)));
  CHECK(grid_points_of(null_set(kXY), d2).empty());
  CHECK_THROWS_AS(grid_points_of(row("1/3", "0"), d2), OffGridError);
  CHECK(all_grid_points(kXY, GradeGrid(4)).size() == 8);

  std::mt19937_64 rng(5);
  auto u = make_indexed_universe(3, 2);
  for (int i = 0; i < 1000; ++i) {
    auto f = random_set(rng, u, 4);
    auto joined = null_set(u);
    for (const auto& p : grid_points_of(f, GradeGrid(4))) joined = unite(joined, p);
    CHECK(joined == f);
  }
}

TEST_CASE("algebraic laws against an integer oracle") {
  constexpr int d = 4;
  std::mt19937_64 rng(17);
  auto u = make_indexed_universe(3, 2);
  const auto grid = GradeGrid(d);
  const auto points = all_grid_points(u, grid);
  for (int i = 0; i < 1000; ++i) {
    auto f = random_set(rng, u, d), g = random_set(rng, u, d), h = random_set(rng, u, d);
    auto nf = numerators(f, d), ng = numerators(g, d);
    bool q = false, sub = true;
    for (std::size_t c = 0; c < nf.size(); ++c) {
      q = q || nf[c] + ng[c] > d;
      sub = sub && nf[c] <= ng[c];
      CHECK(numerators(unite(f, g), d)[c] == std::max(nf[c], ng[c]));
      CHECK(numerators(intersect(f, g), d)[c] == std::min(nf[c], ng[c]));
      CHECK(numerators(complement(f), d)[c] == d - nf[c]);
    }
    CHECK(quasi_coincident(f, g) == q);
    CHECK(subset(f, g) == sub);

    CHECK(unite(f, g) == unite(g, f));
    CHECK(unite(f, unite(g, h)) == unite(unite(f, g), h));
    CHECK(intersect(f, intersect(g, h)) == intersect(intersect(f, g), h));
    CHECK(unite(f, intersect(f, g)) == f);
    CHECK(intersect(f, unite(f, g)) == f);
    CHECK(complement(unite(f, g)) == intersect(complement(f), complement(g)));
    CHECK(complement(intersect(f, g)) == unite(complement(f), complement(g)));
    CHECK(complement(complement(f)) == f);

    // (1) through (6) of the quasi-coincidence proposition.
    CHECK(subset(f, g) == !quasi_coincident(f, complement(g)));
    if (quasi_coincident(f, g)) CHECK_FALSE(intersect(f, g).is_null());
    CHECK_FALSE(quasi_coincident(f, complement(f)));
    bool via_point = false, p6 = true;
    for (const auto& p : points) {
      via_point = via_point || (point_belongs(p, f) && quasi_coincident(p, g));
      if (quasi_coincident(p, f) && !quasi_coincident(p, g)) p6 = false;
      CHECK(!quasi_coincident(p, f) == point_belongs(p, complement(f)));
    }
    CHECK(via_point == quasi_coincident(f, g));
    CHECK(p6 == subset(f, g));
  }
}
