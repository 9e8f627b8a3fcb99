#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nads/point.hpp"

#include <random>
#include <vector>

using namespace nads;

namespace {

PeriodicWord pw(const std::string& s) { return PeriodicWord::from_string(s); }

PeriodicWord random_word(std::mt19937& rng, long long max_len) {
  std::uniform_int_distribution<long long> len(1, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string s;
  long long n = len(rng);
  for (long long i = 0; i < n; ++i) s.push_back(bit(rng) ? '1' : '0');
  return pw(s);
}

Point random_point(std::mt19937& rng, SpaceKind kind) {
  std::uniform_int_distribution<long long> num(0, 64);
  std::uniform_int_distribution<long long> q(-3, 3);
  switch (kind) {
    case SpaceKind::Interval: return interval_point(Rat(num(rng), 64));
    case SpaceKind::Shift: return shift_point(random_word(rng, 6));
    case SpaceKind::Circle: return circle_point(Rat(num(rng), 64), q(rng));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("word canonicalization and indexing") {
  CHECK(pw("0101").word() == "01");
  CHECK(pw("0110").word() == "0110");
  CHECK(pw("111").word() == "1");
  CHECK(pw("001001").word() == "001");
  CHECK(pw("011").period() == 3);
  CHECK_THROWS_AS(pw(""), std::invalid_argument);
  CHECK_THROWS_AS(pw("012"), std::invalid_argument);

  PeriodicWord w = pw("011");
  CHECK(w.at(0) == '0');
  CHECK(w.at(1) == '1');
  CHECK(w.at(4) == '1');
  CHECK(w.at(-1) == '1');
  CHECK(w.at(-3) == '0');

  CHECK(pw("001").shifted(1) == pw("010"));
  CHECK(pw("001").shifted(-1) == pw("100"));
  CHECK(pw("001").shifted(3) == pw("001"));
  CHECK(pw("01").shifted(5) == pw("10"));
}

TEST_CASE("word enumeration by minimal period") {
  CHECK(words_up_to_period(1).size() == 2);
  CHECK(words_up_to_period(2).size() == 4);
  CHECK(words_up_to_period(3).size() == 10);
  // Minimal-period counts 2, 2, 6, 12, 30, 54, 126 for lengths 1..7.
  CHECK(words_up_to_period(7).size() == 232);
  auto up3 = words_up_to_period(3);
  for (size_t i = 0; i < up3.size(); ++i) {
    CHECK(up3[i].period() <= 3);
    if (i > 0) CHECK(up3[i - 1] < up3[i]);
  }
}

TEST_CASE("shift distance closed form on pinned pairs") {
  CHECK(shift_distance(pw("0"), pw("0")) == 0);
  CHECK(shift_distance(pw("0"), pw("1")) == 3);
  CHECK(shift_distance(pw("01"), pw("10")) == 3);
  // Mismatch at odd positions only: 0 + (2 + 2) / (2^2 - 1).
  CHECK(shift_distance(pw("0"), pw("01")) == Rat(4, 3));
  CHECK(shift_distance(pw("1"), pw("01")) == Rat(5, 3));
  // One mismatch per 3-block at offset 0: 1 + (1 + 1) / 7.
  CHECK(shift_distance(pw("001"), pw("101")) == Rat(9, 7));
}

TEST_CASE("shift distance profile matches shifted recomputation") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    PeriodicWord x = random_word(rng, 6), y = random_word(rng, 6);
    auto profile = shift_distance_profile(x, y);
    for (size_t r = 0; r < profile.size(); ++r) {
      long long k = static_cast<long long>(r);
      CHECK(profile[r] == shift_distance(x.shifted(k), y.shifted(k)));
    }
  }
}

TEST_CASE("partial sums enclose the closed form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    PeriodicWord x = random_word(rng, 6), y = random_word(rng, 6);
    Rat exact = shift_distance(x, y);
    Rat prev_gap(4);
    for (long long T : {2, 5, 9, 14, 20}) {
      auto [lo, hi] = shift_distance_partial(x, y, T);
      CHECK(lo <= exact);
      CHECK(exact <= hi);
      CHECK(hi - lo == pow2(1 - T));
      CHECK(hi - lo <= prev_gap);
      prev_gap = hi - lo;
    }
  }
}

TEST_CASE("point factories validate and canonicalize") {
  CHECK_THROWS_AS(interval_point(Rat(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(interval_point(Rat(-1, 2)), std::invalid_argument);
  CHECK(point_eq(shift_point("0101"), shift_point("01")));
  CHECK(point_eq(circle_point(Rat(5, 4), 0), circle_point(Rat(1, 4), 0)));
  CHECK(circle_point(Rat(-1, 4), 2).circle().p == Rat(3, 4));
  CHECK(circle_point(Rat(-1, 4), 2).circle().q == 2);
  CHECK_FALSE(point_eq(circle_point(Rat(0), 0), circle_point(Rat(0), 1)));
  auto prod = product_point({interval_point(Rat(0)), interval_point(Rat(1, 2))});
  CHECK(prod.space.arity == 2);
  CHECK(prod.space.kind == SpaceKind::Interval);
  CHECK_THROWS_AS(product_point({interval_point(Rat(0)), shift_point("0")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(product_point({}), std::invalid_argument);
}

TEST_CASE("pinned distances") {
  CHECK(distance(interval_point(Rat(1, 4)), interval_point(Rat(3, 4))) ==
        QuadVal(Rat(1, 2)));
  CHECK(distance(shift_point("0"), shift_point("1")) == QuadVal(Rat(3)));
  // Arc distance wraps: |0 - 3/4| measures 1/4 the short way round.
  CHECK(distance(circle_point(Rat(0), 0), circle_point(Rat(3, 4), 0)) ==
        QuadVal(Rat(1, 4)));
  // d(0, alpha) = 1 - alpha since alpha > 1/2.
  CHECK(distance(circle_point(Rat(0), 0), circle_point(Rat(0), 1)) ==
        QuadVal(Rat(1), -1));
  auto a = product_point({interval_point(Rat(0)), interval_point(Rat(1, 4))});
  auto b = product_point({interval_point(Rat(1, 8)), interval_point(Rat(3, 4))});
  CHECK(distance(a, b) == QuadVal(Rat(1, 2)));
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937 rng(11);
  for (SpaceKind kind : {SpaceKind::Interval, SpaceKind::Shift, SpaceKind::Circle}) {
    for (int trial = 0; trial < 60; ++trial) {
      Point x = random_point(rng, kind);
      Point y = random_point(rng, kind);
      Point z = random_point(rng, kind);
      QuadVal dxy = distance(x, y);
      CHECK(qv_sign(dxy) >= 0);
      CHECK((qv_sign(dxy) == 0) == point_eq(x, y));
      CHECK(dxy == distance(y, x));
      CHECK(qv_leq(distance(x, z), dxy + distance(y, z)));
    }
  }
}

TEST_CASE("point order is total and compatible with equality") {
  std::mt19937 rng(13);
  for (SpaceKind kind : {SpaceKind::Interval, SpaceKind::Shift, SpaceKind::Circle}) {
    for (int trial = 0; trial < 40; ++trial) {
      Point x = random_point(rng, kind);
      Point y = random_point(rng, kind);
      int lt = point_less(x, y) ? 1 : 0;
      int gt = point_less(y, x) ? 1 : 0;
      int eq = point_eq(x, y) ? 1 : 0;
      CHECK(lt + gt + eq == 1);
      CHECK_FALSE(point_less(x, x));
    }
  }
}
