#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nads/alpha.hpp"

using namespace nads;

namespace {

// Restores the alpha precision settings after tests that shrink them.
struct AlphaGuard {
  AlphaConfig saved = alpha_config();
  ~AlphaGuard() { alpha_config() = saved; }
};

// alpha is the positive root of t^2 + t - 1, so lo < alpha iff
// lo^2 + lo - 1 < 0. Independent of the Fibonacci construction.
bool strictly_below_alpha(const Rat& t) { return t * t + t - 1 < 0; }
bool strictly_above_alpha(const Rat& t) { return t * t + t - 1 > 0; }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(6)) == 6);
  CHECK(rat_floor(Rat(-6)) == -6);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(mod1(Rat(9, 4)) == Rat(1, 4));
  CHECK(mod1(Rat(-1, 4)) == Rat(3, 4));
  CHECK(pow2(3) == Rat(8));
  CHECK(pow2(-3) == Rat(1, 8));
  CHECK(pow2(0) == Rat(1));
  CHECK(rat_abs(Rat(-2, 3)) == Rat(2, 3));

  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("-6/8") == Rat(-3, 4));
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x/3"), std::invalid_argument);
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(parse_rat(rat_str(Rat(-22, 7))) == Rat(-22, 7));
}

TEST_CASE("alpha enclosures bracket the golden conjugate and shrink") {
  Rat prev_width(2);
  for (long long bits : {4, 8, 16, 32, 64, 128}) {
    auto [lo, hi] = alpha_enclosure(bits);
    CHECK(lo < hi);
    CHECK(strictly_below_alpha(lo));
    CHECK(strictly_above_alpha(hi));
    Rat width = hi - lo;
    CHECK(width <= pow2(-bits));
    CHECK(width <= prev_width);
    prev_width = width;
  }
}

TEST_CASE("QuadVal arithmetic and structural equality") {
  QuadVal a(Rat(1, 2), 3);
  QuadVal b(Rat(1, 4), -1);
  CHECK((a + b) == QuadVal(Rat(3, 4), 2));
  CHECK((a - b) == QuadVal(Rat(1, 4), 4));
  CHECK((-a) == QuadVal(Rat(-1, 2), -3));
  CHECK(a.scaled(Rat(2)) == QuadVal(Rat(1), 6));
  CHECK(QuadVal(Rat(1, 3)).scaled(Rat(3, 7)) == QuadVal(Rat(1, 7)));
  CHECK(a != b);
  CHECK(a.is_rational() == false);
  CHECK(QuadVal(Rat(2, 5)).rational() == Rat(2, 5));
  CHECK_THROWS_AS(a.rational(), std::logic_error);
  // Scaling an irrational QuadVal by a non-integer would leave the lattice.
  CHECK_THROWS_AS(a.scaled(Rat(1, 2)), std::logic_error);
}

TEST_CASE("QuadVal sign, order, floor") {
  CHECK(qv_sign(QuadVal()) == 0);
  CHECK(qv_sign(QuadVal(Rat(0), 1)) == 1);
  CHECK(qv_sign(QuadVal(Rat(0), -2)) == -1);
  CHECK(qv_sign(QuadVal(Rat(-1), 2)) == 1);   // 2*alpha > 1
  CHECK(qv_sign(QuadVal(Rat(1), -2)) == -1);
  CHECK(qv_sign(QuadVal(Rat(1), -1)) == 1);   // alpha < 1
  CHECK(qv_less(QuadVal(Rat(1, 2)), QuadVal(Rat(0), 1)));  // 1/2 < alpha
  CHECK(qv_leq(QuadVal(Rat(1, 2)), QuadVal(Rat(1, 2))));
  CHECK(qv_min(QuadVal(Rat(0), 1), QuadVal(Rat(2, 3))) == QuadVal(Rat(0), 1));
  CHECK(qv_max(QuadVal(Rat(0), 1), QuadVal(Rat(2, 3))) == QuadVal(Rat(2, 3)));
  CHECK(qv_abs(QuadVal(Rat(1), -2)) == QuadVal(Rat(-1), 2));

  CHECK(qv_floor(QuadVal(Rat(5, 2))) == 2);
  CHECK(qv_floor(QuadVal(Rat(0), 1)) == 0);
  CHECK(qv_floor(QuadVal(Rat(0), 3)) == 1);    // 3*alpha ~ 1.854
  CHECK(qv_floor(QuadVal(Rat(0), -1)) == -1);
  CHECK(qv_floor(QuadVal(Rat(-5), 2)) == -4);  // -5 + 2*alpha ~ -3.76
  CHECK(qv_mod1(QuadVal(Rat(0), 2)) == QuadVal(Rat(-1), 2));
  CHECK(qv_mod1(QuadVal(Rat(7, 3))) == QuadVal(Rat(1, 3)));
  CHECK(qv_mod1(QuadVal(Rat(0), -1)) == QuadVal(Rat(1), -1));
}

TEST_CASE("precision cap raises instead of guessing") {
  AlphaGuard guard;
  // 6765 - 10946*alpha is about -1.1e-4; an 8-bit alpha enclosure scaled by
  // 10946 cannot separate it from zero.
  QuadVal tiny(Rat(6765), -10946);
  alpha_config().initial_bits = 2;
  alpha_config().max_bits = 8;
  CHECK_THROWS_AS(qv_sign(tiny), PrecisionError);
  alpha_config() = guard.saved;
  CHECK(qv_sign(tiny) == -1);
  CHECK(qv_sign(-tiny) == 1);
}
