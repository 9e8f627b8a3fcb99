#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nads/exact_map.hpp"

#include <random>

using namespace nads;

namespace {

PLMap tent() { return make_pl({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(0)}}); }

// Strictly increasing homeomorphism with two breakpoints.
PLMap homeo_up() {
  return make_pl({{Rat(0), Rat(0)}, {Rat(1, 3), Rat(1, 2)}, {Rat(1, 2), Rat(2, 3)},
                  {Rat(1), Rat(1)}});
}

PLMap homeo_down() {
  return make_pl({{Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 3)}, {Rat(1), Rat(0)}});
}

PLMap random_pl(std::mt19937& rng) {
  std::uniform_int_distribution<int> nbp(0, 3);
  std::uniform_int_distribution<long long> num(0, 24);
  int extra = nbp(rng);
  std::vector<Rat> xs{Rat(0), Rat(1)};
  while (static_cast<int>(xs.size()) < extra + 2) {
    Rat x(num(rng), 24);
    bool fresh = true;
    for (const auto& seen : xs) fresh = fresh && seen != x;
    if (fresh) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& x : xs) pts.emplace_back(x, Rat(num(rng), 24));
  return make_pl(std::move(pts));
}

}  // namespace

TEST_CASE("make_pl validates and canonicalizes") {
  CHECK_THROWS_AS(make_pl({{Rat(0), Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(make_pl({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(make_pl({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_pl({{Rat(0), Rat(0)}, {Rat(1), Rat(2)}}), std::invalid_argument);

  PLMap f = make_pl({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)}});
  CHECK(f.pts.size() == 2);  // collinear interior breakpoint dropped
  CHECK(pl_is_identity(f));
  PLMap g = tent();
  CHECK(g.pts.size() == 3);
}

TEST_CASE("pl_eval pins values") {
  PLMap f = tent();
  CHECK(pl_eval(f, Rat(0)) == Rat(0));
  CHECK(pl_eval(f, Rat(1, 2)) == Rat(1));
  CHECK(pl_eval(f, Rat(1)) == Rat(0));
  CHECK(pl_eval(f, Rat(1, 4)) == Rat(1, 2));
  CHECK(pl_eval(f, Rat(5, 8)) == Rat(3, 4));
  CHECK_THROWS_AS(pl_eval(f, Rat(-1, 8)), std::invalid_argument);
}

TEST_CASE("pl_compose agrees with pointwise evaluation") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    PLMap f = random_pl(rng);
    PLMap g = random_pl(rng);
    PLMap gf = pl_compose(g, f);
    for (long long i = 0; i <= 48; ++i) {
      Rat x(i, 48);
      CHECK(pl_eval(gf, x) == pl_eval(g, pl_eval(f, x)));
    }
  }
  // Associativity through the canonical form.
  PLMap a = tent(), b = homeo_up(), c = homeo_down();
  CHECK(pl_compose(pl_compose(a, b), c).pts == pl_compose(a, pl_compose(b, c)).pts);
}

TEST_CASE("homeomorphism predicates and inverse") {
  CHECK(pl_is_homeo(homeo_up()));
  CHECK(pl_is_homeo(homeo_down()));
  CHECK_FALSE(pl_is_homeo(tent()));
  CHECK(pl_orientation(homeo_up()) == 1);
  CHECK(pl_orientation(homeo_down()) == -1);
  CHECK(pl_orientation(tent()) == 0);
  for (const PLMap& f : {homeo_up(), homeo_down()}) {
    CHECK(pl_is_identity(pl_compose(pl_inverse(f), f)));
    CHECK(pl_is_identity(pl_compose(f, pl_inverse(f))));
    CHECK(pl_inverse(pl_inverse(f)).pts == f.pts);
  }
  CHECK_THROWS_AS(pl_inverse(tent()), std::invalid_argument);
}

TEST_CASE("shift and rotation maps act exactly") {
  ExactMap s1 = shift_map(1);
  CHECK(point_eq(apply(s1, shift_point("001")), shift_point("010")));
  CHECK(point_eq(apply(shift_map(2), shift_point("01")), shift_point("01")));
  CHECK(point_eq(apply(shift_map(-1), shift_point("001")), shift_point("100")));

  ExactMap r = circle_map(Rat(1, 2), 0);
  CHECK(point_eq(apply(r, circle_point(Rat(3, 4), 0)), circle_point(Rat(1, 4), 0)));
  ExactMap ra = circle_map(Rat(0), 1);
  CHECK(point_eq(apply(ra, circle_point(Rat(0), 2)), circle_point(Rat(0), 3)));
}

TEST_CASE("compose merges representations") {
  CHECK(maps_equal(compose(shift_map(2), shift_map(-2)), identity_map({SpaceKind::Shift, 1})));
  CHECK(maps_equal(compose(shift_map(3), shift_map(-1)), shift_map(2)));
  CHECK(maps_equal(compose(circle_map(Rat(3, 4), 1), circle_map(Rat(1, 2), -1)),
                   circle_map(Rat(1, 4), 0)));
  CHECK(is_identity(compose(circle_map(Rat(1, 2), 0), circle_map(Rat(1, 2), 0))));
  ExactMap f = interval_map(homeo_up());
  CHECK(maps_equal(compose(identity_map({SpaceKind::Interval, 1}), f), f));
  CHECK(maps_equal(compose(f, identity_map({SpaceKind::Interval, 1})), f));
  CHECK_THROWS_AS(compose(shift_map(1), f), std::invalid_argument);
}

TEST_CASE("map equality is semantic") {
  // A PL identity written with redundant breakpoints equals the identity tag.
  ExactMap pl_id = interval_map({{Rat(0), Rat(0)}, {Rat(1, 3), Rat(1, 3)}, {Rat(1), Rat(1)}});
  CHECK(is_identity(pl_id));
  CHECK(maps_equal(pl_id, identity_map({SpaceKind::Interval, 1})));
  CHECK(maps_equal(identity_map({SpaceKind::Shift, 1}), shift_map(0)));
  CHECK(maps_equal(identity_map({SpaceKind::Circle, 1}), circle_map(Rat(0), 0)));
  CHECK_FALSE(maps_equal(shift_map(1), shift_map(-1)));
  CHECK_FALSE(maps_equal(circle_map(Rat(0), 1), circle_map(Rat(0), -1)));
}

TEST_CASE("inverses across representations") {
  CHECK(maps_equal(inverse(shift_map(3)), shift_map(-3)));
  CHECK(maps_equal(inverse(circle_map(Rat(1, 4), 2)), circle_map(Rat(3, 4), -2)));
  CHECK(is_invertible(interval_map(homeo_down())));
  CHECK_FALSE(is_invertible(interval_map(tent())));
  CHECK_THROWS_AS(inverse(interval_map(tent())), std::invalid_argument);
  std::mt19937 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    Rat p(std::uniform_int_distribution<long long>(0, 15)(rng), 16);
    long long q = std::uniform_int_distribution<long long>(-4, 4)(rng);
    ExactMap r = circle_map(p, q);
    CHECK(is_identity(compose(inverse(r), r)));
  }
}

TEST_CASE("product maps act coordinatewise") {
  ExactMap f = product_map({shift_map(1), shift_map(-1)});
  Point x = product_point({shift_point("001"), shift_point("001")});
  Point fx = apply(f, x);
  CHECK(point_eq(fx.parts()[0], shift_point("010")));
  CHECK(point_eq(fx.parts()[1], shift_point("100")));
  ExactMap ff = compose(f, f);
  Point ffx = apply(ff, x);
  CHECK(point_eq(ffx, apply(f, fx)));
  CHECK(is_identity(compose(product_map({shift_map(1), shift_map(2)}),
                            product_map({shift_map(-1), shift_map(-2)}))));
  CHECK_THROWS_AS(product_map({shift_map(1), interval_map(tent())}), std::invalid_argument);
}

TEST_CASE("fixed point sets") {
  FixedSet id_fix = fixed_points(identity_map({SpaceKind::Interval, 1}));
  CHECK(id_fix.all);

  FixedSet tent_fix = fixed_points(interval_map(tent()));
  CHECK_FALSE(tent_fix.all);
  CHECK(tent_fix.segments.empty());
  REQUIRE(tent_fix.points.size() == 2);
  CHECK(tent_fix.points[0].interval() == Rat(0));
  CHECK(tent_fix.points[1].interval() == Rat(2, 3));

  // Diagonal segment on [1/3, 1/2]; the boundary crossings of the flanking
  // pieces land on the segment ends and must not be double counted.
  PLMap partial_diag = make_pl({{Rat(0), Rat(1, 4)}, {Rat(1, 3), Rat(1, 3)},
                                {Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(3, 4)}});
  FixedSet seg_fix = fixed_points(interval_map(partial_diag));
  CHECK(seg_fix.points.empty());
  REQUIRE(seg_fix.segments.size() == 1);
  CHECK(seg_fix.segments[0].first == Rat(1, 3));
  CHECK(seg_fix.segments[0].second == Rat(1, 2));

  // sigma^2 fixes exactly the words of period dividing 2.
  FixedSet s2 = fixed_points(shift_map(2));
  CHECK(s2.points.size() == 4);
  FixedSet s3 = fixed_points(shift_map(-3));
  CHECK(s3.points.size() == 8);  // 2 constant words + 6 of minimal period 3
  CHECK(fixed_points(shift_map(0)).all);

  FixedSet rot = fixed_points(circle_map(Rat(1, 3), 0));
  CHECK_FALSE(rot.all);
  CHECK(rot.points.empty());
  CHECK(fixed_points(circle_map(Rat(0), 0)).all);
}
