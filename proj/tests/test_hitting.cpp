#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nads/hitting.hpp"

#include <random>

using namespace nads;

namespace {

struct CapGuard {
  long long saved = run_config().horizon_cap;
  ~CapGuard() { run_config().horizon_cap = saved; }
};

PLMap tent() { return make_pl({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(0)}}); }

std::vector<long long> random_members(std::mt19937& rng, long long horizon) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<long long> out;
  for (long long n = 1; n <= horizon; ++n)
    if (coin(rng) == 0) out.push_back(n);
  return out;
}

// Reference combinatorics computed directly from a membership bitmap.
struct BruteStats {
  long long max_gap = 0, max_run = 0;
  std::vector<bool> in;

  explicit BruteStats(const HittingSet& hs) : in(static_cast<size_t>(hs.horizon) + 1, false) {
    for (long long m : hs.members) in[static_cast<size_t>(m)] = true;
    long long gap = 0, run = 0;
    for (long long n = 1; n <= hs.horizon; ++n) {
      if (in[static_cast<size_t>(n)]) {
        ++run;
        gap = 0;
      } else {
        ++gap;
        run = 0;
      }
      max_gap = std::max(max_gap, gap);
      max_run = std::max(max_run, run);
    }
  }
};

// Independent recomputation of the sensitivity hitting set by stepping every
// candidate point forward and comparing all pairwise distances.
std::vector<long long> brute_sensitivity(const NASystem& sys, const OpenSet& u, const Rat& delta,
                                         long long H, const Rat& net_eps) {
  std::vector<Point> pts;
  for (const Point& x : epsilon_net(sys.space, net_eps))
    if (member(x, u) == Tri::True) pts.push_back(x);
  std::vector<long long> members;
  for (long long n = 1; n <= H; ++n) {
    for (Point& x : pts) x = apply(step_map(sys, n), x);
    bool hit = false;
    for (size_t i = 0; i < pts.size() && !hit; ++i)
      for (size_t j = i + 1; j < pts.size() && !hit; ++j)
        hit = qv_sign(distance(pts[i], pts[j]) - QuadVal{delta, 0}) > 0;
    if (hit) members.push_back(n);
  }
  return members;
}

}  // namespace

TEST_CASE("make_hitting_set canonicalizes and validates") {
  HittingSet hs = make_hitting_set(10, {7, 3, 3, 10, 1}, HitKind::Transitivity);
  CHECK(hs.members == std::vector<long long>{1, 3, 7, 10});
  CHECK(hs.contains(3));
  CHECK_FALSE(hs.contains(4));
  CHECK_THROWS_AS(make_hitting_set(10, {0}, HitKind::Transitivity), std::invalid_argument);
  CHECK_THROWS_AS(make_hitting_set(10, {11}, HitKind::Transitivity), std::invalid_argument);
  CHECK_THROWS_AS(make_hitting_set(-1, {}, HitKind::Transitivity), std::invalid_argument);

  HittingSet empty = make_hitting_set(8, {}, HitKind::Sensitivity);
  CHECK(empty.max_gap() == 8);
  CHECK(empty.max_run() == 0);
  HittingSet full = make_hitting_set(5, {1, 2, 3, 4, 5}, HitKind::Transitivity);
  CHECK(full.max_gap() == 0);
  CHECK(full.max_run() == 5);
}

TEST_CASE("gap, run and density statistics match a direct scan") {
  std::mt19937 rng(401);
  for (int trial = 0; trial < 300; ++trial) {
    long long H = 1 + static_cast<long long>(rng() % 40);
    HittingSet hs = make_hitting_set(H, random_members(rng, H), HitKind::Transitivity);
    BruteStats brute(hs);
    CHECK(hs.max_gap() == brute.max_gap);
    CHECK(hs.max_run() == brute.max_run);
    auto profile = hs.density_profile();
    REQUIRE(static_cast<long long>(profile.size()) == H);
    long long count = 0;
    for (long long n = 1; n <= H; ++n) {
      if (brute.in[static_cast<size_t>(n)]) ++count;
      CHECK(profile[static_cast<size_t>(n - 1)] == Rat(Int(count), Int(n)));
    }
  }
}

TEST_CASE("classifiers agree with definition-level scans") {
  std::mt19937 rng(402);
  for (int trial = 0; trial < 300; ++trial) {
    long long H = 1 + static_cast<long long>(rng() % 30);
    HittingSet hs = make_hitting_set(H, random_members(rng, H), HitKind::Transitivity);
    BruteStats brute(hs);

    long long N = 1 + static_cast<long long>(rng() % H);
    bool cof = true;
    for (long long n = N; n <= H; ++n) cof = cof && brute.in[static_cast<size_t>(n)];
    ClassVerdict cv = classify_cofinite(hs, N);
    CHECK(cv.satisfied == cof);
    CHECK(cv.property == "cofinite");
    if (!cof) {
      long long fm = cv.details.at("first_missing").get<long long>();
      CHECK(fm >= N);
      CHECK_FALSE(hs.contains(fm));
      for (long long n = N; n < fm; ++n) CHECK(brute.in[static_cast<size_t>(n)]);
    }

    long long a = static_cast<long long>(rng() % (H + 1));
    bool syn = true;
    std::optional<long long> first_bad;
    for (long long i = 1; i + a <= H; ++i) {
      bool meets = false;
      for (long long n = i; n <= i + a; ++n) meets = meets || brute.in[static_cast<size_t>(n)];
      if (!meets) {
        syn = false;
        if (!first_bad) first_bad = i;
      }
    }
    ClassVerdict sv = classify_syndetic(hs, a);
    CHECK(sv.satisfied == syn);
    CHECK(sv.satisfied == (hs.max_gap() <= a));
    if (!syn) {
      long long ws = sv.details.at("window_start").get<long long>();
      CHECK(ws == *first_bad);
    }

    long long p = 1 + static_cast<long long>(rng() % H);
    ClassVerdict tv = classify_thick(hs, p);
    CHECK(tv.satisfied == (brute.max_run >= p));
    if (tv.satisfied) {
      long long rs = tv.details.at("run_start").get<long long>();
      for (long long n = rs; n < rs + p; ++n) CHECK(brute.in[static_cast<size_t>(n)]);
      CHECK((rs == 1 || !brute.in[static_cast<size_t>(rs - 1)]));
    }

    Rat rho(Int(rng() % 5), Int(4));
    ClassVerdict dv = classify_upper_density(hs, rho);
    CHECK(dv.satisfied == (Rat(Int(hs.members.size()), Int(H)) >= rho));
    CHECK(dv.details.at("profile").size() == static_cast<size_t>(H));

    // Parameter monotonicity at the definition level.
    if (a + 1 <= H && sv.satisfied) CHECK(classify_syndetic(hs, a + 1).satisfied);
    if (p + 1 <= H && classify_thick(hs, p + 1).satisfied) CHECK(tv.satisfied);
    if (N + 1 <= H && cv.satisfied) CHECK(classify_cofinite(hs, N + 1).satisfied);
    // A cofinite tail forces syndetic windows and a long run at scale.
    if (cv.satisfied) {
      if (N - 1 <= H) CHECK(classify_syndetic(hs, N - 1).satisfied);
      CHECK(classify_thick(hs, H - N + 1).satisfied);
    }
  }
}

TEST_CASE("alternating shift schedule hits on exactly the odd times") {
  NASystem sys = periodic_system({shift_map(1), shift_map(-1)}, "alt");
  OpenSet u = open_set(cylinder_open(0, "0"));
  OpenSet v = open_set(cylinder_open(0, "1"));
  HittingSet hs = transitivity_times(sys, u, v, 20);
  std::vector<long long> odds;
  for (long long n = 1; n <= 20; n += 2) odds.push_back(n);
  CHECK(hs.members == odds);
  CHECK(hs.kind == HitKind::Transitivity);
  CHECK(hs.max_gap() == 1);
  CHECK(hs.max_run() == 1);
  CHECK(classify_syndetic(hs, 1).satisfied);
  CHECK_FALSE(classify_syndetic(hs, 0).satisfied);
  CHECK_FALSE(classify_thick(hs, 2).satisfied);
  CHECK(classify_upper_density(hs, Rat(1, 2)).satisfied);
  CHECK_FALSE(classify_cofinite(hs, 1).satisfied);

  // The constant shift moves the window away from coordinate 0, so the same
  // pair of cylinders is hit at every time.
  NASystem cs = constant_system(shift_map(1), "shift");
  HittingSet all = transitivity_times(cs, u, v, 20);
  CHECK(all.members.size() == 20);
  CHECK(classify_cofinite(all, 1).satisfied);
}

TEST_CASE("tent map reaches the right quarter from time two on") {
  NASystem sys = constant_system(interval_map(tent()), "tent");
  OpenSet u = open_set(interval_open(Rat(0), Rat(1, 4)));
  OpenSet v = open_set(interval_open(Rat(3, 4), Rat(1)));
  HittingSet hs = transitivity_times(sys, u, v, 10);
  std::vector<long long> expected;
  for (long long n = 2; n <= 10; ++n) expected.push_back(n);
  CHECK(hs.members == expected);
  CHECK(classify_cofinite(hs, 2).satisfied);
  CHECK_FALSE(classify_cofinite(hs, 1).satisfied);
}

TEST_CASE("rotation hitting times match direct center distances") {
  NASystem sys = constant_system(circle_map(Rat(0), 1), "rot-alpha");
  OpenSet u = open_set(arc_open(Rat(0), 0, Rat(1, 16)));
  OpenSet v = open_set(arc_open(Rat(1, 2), 0, Rat(1, 16)));
  HittingSet hs = transitivity_times(sys, u, v, 60);
  // The n-step image is the arc of the same radius around n*alpha, so the
  // times are exactly those with d(n*alpha, 1/2) < 1/8.
  std::vector<long long> expected;
  Point target = circle_point(Rat(1, 2), 0);
  for (long long n = 1; n <= 60; ++n) {
    QuadVal d = distance(circle_point(Rat(0), n), target);
    if (qv_sign(d - QuadVal{Rat(1, 8), 0}) < 0) expected.push_back(n);
  }
  CHECK(hs.members == expected);
  CHECK_FALSE(expected.empty());
}

TEST_CASE("incremental images agree with whole-segment recomputation") {
  std::mt19937 rng(403);
  std::uniform_int_distribution<long long> shift_k(-2, 2);
  std::uniform_int_distribution<int> len(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ExactMap> maps;
    int m = len(rng);
    for (int i = 0; i < m; ++i) maps.push_back(shift_map(shift_k(rng)));
    NASystem sys = periodic_system(maps, "random-shift");
    OpenSet u = open_set(cylinder_open(shift_k(rng), trial % 2 ? "01" : "10"));
    OpenSet v = open_set(cylinder_open(shift_k(rng), trial % 3 ? "11" : "00"));
    HittingSet fast = transitivity_times(sys, u, v, 12);
    std::vector<long long> slow;
    for (long long n = 1; n <= 12; ++n) {
      OpenSet img = image_open(segment(sys, 1, n), u);
      if (intersects(img, v) == Tri::True) slow.push_back(n);
    }
    CHECK(fast.members == slow);
  }
  // Piecewise linear homeomorphism schedule on the interval.
  PLMap up = make_pl({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 4)}, {Rat(1), Rat(1)}});
  PLMap down = make_pl({{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1, 2)}, {Rat(1), Rat(1)}});
  NASystem sys = periodic_system({interval_map(up), interval_map(down), interval_map(up)}, "pl");
  OpenSet u = open_set(interval_open(Rat(1, 8), Rat(1, 4)));
  OpenSet v = open_set(interval_open(Rat(1, 16), Rat(1, 8)));
  HittingSet fast = transitivity_times(sys, u, v, 15);
  std::vector<long long> slow;
  for (long long n = 1; n <= 15; ++n) {
    OpenSet img = image_open(segment(sys, 1, n), u);
    if (intersects(img, v) == Tri::True) slow.push_back(n);
  }
  CHECK(fast.members == slow);
}

TEST_CASE("sensitivity times on the full shift separate at every step") {
  NASystem sys = constant_system(shift_map(1), "shift");
  OpenSet u = whole_space(SpaceId{SpaceKind::Shift, 1});
  HittingSet hs = sensitivity_times(sys, u, Rat(1), 30, Rat(1));
  CHECK(hs.kind == HitKind::Sensitivity);
  CHECK(static_cast<long long>(hs.members.size()) == 30);
  // Nothing exceeds the diameter, so delta = 3 empties the set.
  HittingSet none = sensitivity_times(sys, u, Rat(3), 30, Rat(1));
  CHECK(none.members.empty());
}

TEST_CASE("shift fast path agrees with the generic orbit scan") {
  NASystem sys = periodic_system({shift_map(1), shift_map(-2), shift_map(2)}, "3periodic");
  OpenSet u = open_set(cylinder_open(0, "01"));
  for (const Rat& delta : {Rat(3, 2), Rat(2), Rat(5, 2)}) {
    HittingSet hs = sensitivity_times(sys, u, delta, 18, Rat(1, 2));
    CHECK(hs.members == brute_sensitivity(sys, u, delta, 18, Rat(1, 2)));
  }
}

TEST_CASE("isometry flag short-circuits to a constant answer") {
  NASystem rot{SpaceId{SpaceKind::Circle, 1},
               [](long long n) { return circle_map(Rat(0), n % 2 ? 1 : -1); },
               "rot-alt", 2, 2, std::nullopt, std::nullopt, true};
  OpenSet u = whole_space(SpaceId{SpaceKind::Circle, 1});
  HittingSet flagged = sensitivity_times(rot, u, Rat(1, 4), 12, Rat(1, 8));
  NASystem plain = rot;
  plain.all_isometries = false;
  HittingSet scanned = sensitivity_times(plain, u, Rat(1, 4), 12, Rat(1, 8));
  CHECK(flagged.members == scanned.members);
  CHECK(static_cast<long long>(flagged.members.size()) == 12);
  // Net points of a small ball never separate under rotations.
  OpenSet small = ball_open(circle_point(Rat(0), 0), Rat(1, 16));
  HittingSet none = sensitivity_times(rot, small, Rat(1, 4), 12, Rat(1, 32));
  CHECK(none.members.empty());
}

TEST_CASE("tent orbits separate net pairs of a small interval") {
  NASystem sys = constant_system(interval_map(tent()), "tent");
  OpenSet u = open_set(interval_open(Rat(0), Rat(1, 4)));
  HittingSet hs = sensitivity_times(sys, u, Rat(1, 2), 12, Rat(1, 16));
  CHECK(hs.members == brute_sensitivity(sys, u, Rat(1, 2), 12, Rat(1, 16)));
  // The candidates 1/16, 1/8, 3/16 double up to {1, 0, 1} at step four and
  // collapse onto the fixed point 0 right after, so the separation happens
  // exactly once.
  CHECK(hs.members == std::vector<long long>{4});
}

TEST_CASE("accelerated systems hit at the original multiples") {
  NASystem sys = periodic_system({shift_map(1), shift_map(-2), shift_map(2)}, "3periodic");
  OpenSet u = open_set(cylinder_open(0, "011"));
  OpenSet v = open_set(cylinder_open(-1, "110"));
  HittingSet orig = transitivity_times(sys, u, v, 24);
  HittingSet fast = transitivity_times(kth_iterate_system(sys, 3), u, v, 8);
  std::vector<long long> expected;
  for (long long n = 1; n <= 8; ++n)
    if (orig.contains(3 * n)) expected.push_back(n);
  CHECK(fast.members == expected);
}

TEST_CASE("hitting scans respect the horizon guards") {
  CapGuard guard;
  run_config().horizon_cap = 10;
  NASystem sys = constant_system(shift_map(1), "shift");
  OpenSet u = open_set(cylinder_open(0, "0"));
  OpenSet v = open_set(cylinder_open(0, "1"));
  CHECK_THROWS_AS(transitivity_times(sys, u, v, 11), std::invalid_argument);
  CHECK_THROWS_AS(transitivity_times(sys, u, v, 0), std::invalid_argument);
  CHECK_THROWS_AS(sensitivity_times(sys, u, Rat(1), 11, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(sensitivity_times(sys, u, Rat(0), 5, Rat(1)), std::invalid_argument);
  OpenSet w = open_set(interval_open(Rat(0), Rat(1)));
  CHECK_THROWS_AS(transitivity_times(sys, w, v, 5), std::invalid_argument);
}
