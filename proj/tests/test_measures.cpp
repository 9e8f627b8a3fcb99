#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nads/measures.hpp"

#include <functional>
#include <random>

using namespace nads;

namespace {

struct AlphaGuard {
  AlphaConfig saved = alpha_config();
  ~AlphaGuard() { alpha_config() = saved; }
};

PLMap tent() { return make_pl({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(0)}}); }

AtomicMeasure random_measure(std::mt19937& rng, int max_atoms) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  std::uniform_int_distribution<long long> coord(0, 16);
  std::uniform_int_distribution<long long> weight(1, 6);
  int m = natoms(rng);
  std::vector<Point> pts;
  std::vector<Rat> ws;
  Rat total(0);
  for (int i = 0; i < m; ++i) {
    pts.push_back(interval_point(Rat(coord(rng), 16)));
    ws.emplace_back(weight(rng));
    total += ws.back();
  }
  std::vector<std::pair<Point, Rat>> atoms;
  for (int i = 0; i < m; ++i) atoms.emplace_back(pts[static_cast<size_t>(i)], ws[static_cast<size_t>(i)] / total);
  return atomic_measure(std::move(atoms));
}

// Definition-level Prohorov condition check, written independently of the
// library's bitmask version: recurse over the subsets of supp(mu) directly.
bool brute_one_sided(const AtomicMeasure& mu, const AtomicMeasure& nu, const Rat& eps) {
  size_t m = mu.atoms.size();
  std::vector<size_t> chosen;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == m) {
      if (chosen.empty()) return true;
      Rat mu_a(0);
      for (size_t k : chosen) mu_a += mu.atoms[k].second;
      Rat nu_n(0);
      for (const auto& [y, w] : nu.atoms) {
        bool close = false;
        for (size_t k : chosen)
          if (qv_sign(distance(y, mu.atoms[k].first) - QuadVal{eps, 0}) < 0) close = true;
        if (close) nu_n += w;
      }
      return mu_a <= nu_n + eps;
    }
    if (!rec(i + 1)) return false;
    chosen.push_back(i);
    bool ok = rec(i + 1);
    chosen.pop_back();
    return ok;
  };
  return rec(0);
}

bool brute_prohorov_check(const AtomicMeasure& mu, const AtomicMeasure& nu, const Rat& eps) {
  return brute_one_sided(mu, nu, eps) && brute_one_sided(nu, mu, eps);
}

}  // namespace

TEST_CASE("atomic measure validation and canonical form") {
  Point x = interval_point(Rat(1, 4)), y = interval_point(Rat(3, 4));
  AtomicMeasure mu = atomic_measure({{y, Rat(1, 4)}, {x, Rat(1, 2)}, {y, Rat(1, 4)}});
  REQUIRE(mu.atoms.size() == 2);
  CHECK(point_eq(mu.atoms[0].first, x));
  CHECK(mu.atoms[0].second == Rat(1, 2));
  CHECK(mu.atoms[1].second == Rat(1, 2));
  CHECK_THROWS_AS(atomic_measure({}), std::invalid_argument);
  CHECK_THROWS_AS(atomic_measure({{x, Rat(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(atomic_measure({{x, Rat(0)}, {y, Rat(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(atomic_measure({{x, Rat(1)}, {shift_point("0"), Rat(0)}}),
                  std::invalid_argument);

  AtomicMeasure d = dirac(shift_point("01"));
  CHECK(d.atoms.size() == 1);
  CHECK(d.atoms[0].second == Rat(1));

  AtomicMeasure e = empirical({x, y, x, x});
  REQUIRE(e.atoms.size() == 2);
  CHECK(e.atoms[0].second == Rat(3, 4));
  CHECK(e.atoms[1].second == Rat(1, 4));
}

TEST_CASE("pushforward carries weights and merges collisions") {
  // The tent map sends 1/4 and 3/4 to the same point.
  AtomicMeasure mu = empirical({interval_point(Rat(1, 4)), interval_point(Rat(3, 4))});
  AtomicMeasure nu = pushforward_map(interval_map(tent()), mu);
  REQUIRE(nu.atoms.size() == 1);
  CHECK(point_eq(nu.atoms[0].first, interval_point(Rat(1, 2))));
  CHECK(nu.atoms[0].second == Rat(1));

  std::mt19937 rng(501);
  std::uniform_int_distribution<long long> k(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    NASystem sys = periodic_system({shift_map(k(rng)), shift_map(k(rng))}, "random");
    AtomicMeasure seed = empirical({shift_point("01"), shift_point("001"), shift_point("1")});
    for (long long n : {0, 1, 3, 6}) {
      AtomicMeasure stepped = pushforward(sys, seed, n);
      AtomicMeasure whole = pushforward_map(segment(sys, 1, n), seed);
      REQUIRE(stepped.atoms.size() == whole.atoms.size());
      for (size_t i = 0; i < stepped.atoms.size(); ++i) {
        CHECK(point_eq(stepped.atoms[i].first, whole.atoms[i].first));
        CHECK(stepped.atoms[i].second == whole.atoms[i].second);
      }
    }
  }
  CHECK_THROWS_AS(pushforward(constant_system(shift_map(1), "s"), mu, 1), std::invalid_argument);
}

TEST_CASE("measure of an open set sums exactly the inside atoms") {
  AtomicMeasure mu = atomic_measure({{interval_point(Rat(0)), Rat(1, 8)},
                                     {interval_point(Rat(1, 2)), Rat(3, 8)},
                                     {interval_point(Rat(3, 4)), Rat(1, 2)}});
  CHECK(measure_of(mu, open_set(interval_open(Rat(1, 4), Rat(1))), "t") == Rat(7, 8));
  CHECK(measure_of(mu, open_set(interval_open(Rat(0), Rat(1, 2))), "t") == Rat(0));
  CHECK(measure_of(mu, whole_space(SpaceId{SpaceKind::Interval, 1}), "t") == Rat(1));

  // Undecided membership surfaces as a PrecisionError naming the caller.
  AlphaGuard guard;
  AtomicMeasure nu = dirac(circle_point(Rat(0), 10946));
  OpenSet tiny = open_set(arc_open(Rat(0), 0, Rat(4, 100000)));
  alpha_config() = AlphaConfig{4, 16};
  CHECK_THROWS_AS(measure_of(nu, tiny, "tiny-arc"), PrecisionError);
  alpha_config() = guard.saved;
  CHECK(measure_of(nu, tiny, "tiny-arc") == Rat(0));
}

TEST_CASE("prohorov check matches a definition-level recursion") {
  std::mt19937 rng(502);
  std::uniform_int_distribution<long long> epsnum(0, 9);
  for (int trial = 0; trial < 60; ++trial) {
    AtomicMeasure mu = random_measure(rng, 4);
    AtomicMeasure nu = random_measure(rng, 4);
    Rat eps(epsnum(rng), 8);
    bool lib = prohorov_check(mu, nu, eps);
    CHECK(lib == brute_prohorov_check(mu, nu, eps));
    // Symmetry and monotonicity in eps.
    CHECK(lib == prohorov_check(nu, mu, eps));
    if (lib) CHECK(prohorov_check(mu, nu, eps + Rat(1, 8)));
  }
}

TEST_CASE("prohorov distance between diracs is the point distance") {
  std::mt19937 rng(503);
  std::uniform_int_distribution<long long> coord(0, 24);
  Rat tol(1, 512);
  for (int trial = 0; trial < 12; ++trial) {
    Point x = interval_point(Rat(coord(rng), 24));
    Point y = interval_point(Rat(coord(rng), 24));
    auto [lo, hi] = prohorov(dirac(x), dirac(y), tol);
    REQUIRE(hi - lo <= tol);
    QuadVal d = distance(x, y);
    Rat expected = d.rational() < 1 ? d.rational() : Rat(1);
    CHECK(lo <= expected);
    CHECK(expected <= hi);
  }
  // Exact on the circle as well, where distances involve alpha.
  auto [lo, hi] = prohorov(dirac(circle_point(Rat(0), 0)), dirac(circle_point(Rat(0), 1)),
                           Rat(1, 1024));
  QuadVal d = distance(circle_point(Rat(0), 0), circle_point(Rat(0), 1));  // 1 - alpha
  CHECK(qv_sign(QuadVal{lo, 0} - d) <= 0);
  CHECK(qv_sign(d - QuadVal{hi, 0}) <= 0);
}

TEST_CASE("prohorov enclosure pins and metric properties") {
  AtomicMeasure point_mass = dirac(interval_point(Rat(0)));
  AtomicMeasure split = atomic_measure(
      {{interval_point(Rat(0)), Rat(1, 2)}, {interval_point(Rat(1, 2)), Rat(1, 2)}});
  // Worked by hand: the condition first holds exactly at eps = 1/2, so the
  // bisection's upper end lands on it.
  auto [lo, hi] = prohorov(point_mass, split, Rat(1, 64));
  CHECK(hi == Rat(1, 2));
  CHECK(lo >= Rat(1, 2) - Rat(1, 64));

  // Self distance is zero.
  auto [slo, shi] = prohorov(split, split, Rat(1, 128));
  CHECK(slo == Rat(0));
  CHECK(shi <= Rat(1, 128));

  // Triangle inequality holds for the enclosure endpoints.
  std::mt19937 rng(504);
  Rat tol(1, 256);
  for (int trial = 0; trial < 8; ++trial) {
    AtomicMeasure a = random_measure(rng, 3);
    AtomicMeasure b = random_measure(rng, 3);
    AtomicMeasure c = random_measure(rng, 3);
    auto ab = prohorov(a, b, tol);
    auto bc = prohorov(b, c, tol);
    auto ac = prohorov(a, c, tol);
    CHECK(ac.first <= ab.second + bc.second);
  }

  // The subset enumeration refuses oversized supports.
  std::vector<Point> many;
  for (long long i = 0; i <= 12; ++i) many.push_back(interval_point(Rat(i, 12)));
  CHECK_THROWS_AS(prohorov(empirical(many), point_mass, Rat(1, 64)), std::invalid_argument);
  CHECK_THROWS_AS(prohorov(point_mass, split, Rat(0)), std::invalid_argument);
}

TEST_CASE("measure opens use strict thresholds") {
  MeasureOpen o = measure_open(cylinder_open(0, "0"), Rat(1, 2));
  AtomicMeasure half = atomic_measure(
      {{shift_point("0"), Rat(1, 2)}, {shift_point("1"), Rat(1, 2)}});
  CHECK_FALSE(measure_open_member(half, o));
  AtomicMeasure more = atomic_measure(
      {{shift_point("0"), Rat(2, 3)}, {shift_point("1"), Rat(1, 3)}});
  CHECK(measure_open_member(more, o));

  MeasureOpen both = measure_open({{cylinder_open(0, "0"), Rat(1, 4)},
                                   {cylinder_open(1, "1"), Rat(1, 4)}});
  // Every conjunct must clear its threshold. The point "01" lies in both
  // cylinders; the constant word "0" misses the second one entirely.
  CHECK(measure_open_member(dirac(shift_point("01")), both));
  CHECK(measure_open_member(more, both));
  CHECK_FALSE(measure_open_member(dirac(shift_point("0")), both));

  CHECK_THROWS_AS(measure_open(cylinder_open(0, "0"), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(measure_open(cylinder_open(0, "0"), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(measure_open(std::vector<std::pair<BasicOpen, Rat>>{}), std::invalid_argument);
}

TEST_CASE("measure hitting times follow the pushed seeds") {
  NASystem sys = constant_system(shift_map(1), "shift");
  MeasureOpen o1 = measure_open(cylinder_open(0, "0"), Rat(1, 2));
  MeasureOpen o2 = measure_open(cylinder_open(0, "1"), Rat(1, 2));
  std::vector<AtomicMeasure> seeds{dirac(shift_point("01"))};
  HittingSet hs = measure_transitivity_times(sys, o1, o2, 10, seeds);
  CHECK(hs.members == std::vector<long long>{1, 3, 5, 7, 9});
  CHECK(hs.kind == HitKind::Transitivity);

  // A seed outside the source open is rejected.
  std::vector<AtomicMeasure> bad{dirac(shift_point("1"))};
  CHECK_THROWS_AS(measure_transitivity_times(sys, o1, o2, 10, bad), std::invalid_argument);
  CHECK_THROWS_AS(measure_transitivity_times(sys, o1, o2, 10, {}), std::invalid_argument);
  CHECK_THROWS_AS(measure_transitivity_times(sys, o1, o2, 0, seeds), std::invalid_argument);
}

TEST_CASE("default measure seeds enumerate small net subsets") {
  auto seeds = default_measure_seeds(SpaceId{SpaceKind::Interval, 1}, Rat(1, 2), 2);
  // Net {0, 1/2, 1}: three singletons plus three pairs.
  REQUIRE(seeds.size() == 6);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(seeds[i].atoms.size() == 1);
    CHECK(seeds[i].atoms[0].second == Rat(1));
  }
  for (size_t i = 3; i < 6; ++i) {
    CHECK(seeds[i].atoms.size() == 2);
    CHECK(seeds[i].atoms[0].second == Rat(1, 2));
  }
  auto singletons = default_measure_seeds(SpaceId{SpaceKind::Shift, 1}, Rat(2), 1);
  CHECK(singletons.size() == epsilon_net(SpaceId{SpaceKind::Shift, 1}, Rat(2)).size());
  CHECK_THROWS_AS(default_measure_seeds(SpaceId{SpaceKind::Interval, 1}, Rat(1, 2), 0),
                  std::invalid_argument);
}
