#pragma once

// Exact arithmetic in the ring Q + Q*alpha where alpha = (sqrt(5)-1)/2,
// the rotation angle used by the circle systems. A QuadVal stores the pair
// (a, b) for a + b*alpha. Equality is structural and exact because alpha is
// irrational: a + b*alpha = c + d*alpha forces a = c and b = d.
//
// Order comparisons are decided by refining a rational enclosure of alpha
// (consecutive Fibonacci convergents) until the sign of the value is
// determined. For distinct values this terminates; the configured precision
// cap only exists to turn a runaway refinement into a reported error rather
// than a hang.

#include "nads/rational.hpp"

#include <stdexcept>
#include <utility>

namespace nads {

struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

struct AlphaConfig {
  long long initial_bits = 64;
  long long max_bits = 4096;
};

AlphaConfig& alpha_config();

// Rational interval [lo, hi] containing alpha with hi - lo <= 2^-bits.
std::pair<Rat, Rat> alpha_enclosure(long long bits);

struct QuadVal {
  Rat a;        // rational part
  long long b;  // coefficient of alpha

  QuadVal() : a(0), b(0) {}
  QuadVal(Rat r) : a(std::move(r)), b(0) {}  // NOLINT(google-explicit-constructor)
  QuadVal(Rat r, long long c) : a(std::move(r)), b(c) {}

  bool is_rational() const { return b == 0; }
  Rat rational() const {
    if (b != 0) throw std::logic_error("QuadVal: not rational");
    return a;
  }

  QuadVal operator+(const QuadVal& o) const { return {a + o.a, b + o.b}; }
  QuadVal operator-(const QuadVal& o) const { return {a - o.a, b - o.b}; }
  QuadVal operator-() const { return {-a, -b}; }
  QuadVal scaled(const Rat& r) const;

  bool operator==(const QuadVal& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadVal& o) const { return !(*this == o); }

  // Enclosure of the value at the given alpha precision.
  std::pair<Rat, Rat> enclosure(long long bits) const;
};

// Sign of v as -1, 0, +1. Zero is decided structurally; nonzero values are
// resolved by enclosure refinement. Throws PrecisionError at the cap.
int qv_sign(const QuadVal& v);

inline bool qv_less(const QuadVal& x, const QuadVal& y) { return qv_sign(x - y) < 0; }
inline bool qv_leq(const QuadVal& x, const QuadVal& y) { return qv_sign(x - y) <= 0; }
inline QuadVal qv_min(const QuadVal& x, const QuadVal& y) { return qv_less(x, y) ? x : y; }
inline QuadVal qv_max(const QuadVal& x, const QuadVal& y) { return qv_less(x, y) ? y : x; }
inline QuadVal qv_abs(const QuadVal& v) { return qv_sign(v) < 0 ? -v : v; }

// Largest integer n <= v. Decidable for every QuadVal: rational values floor
// directly and irrational ones never sit on an integer.
Int qv_floor(const QuadVal& v);

// v reduced modulo 1 into [0, 1).
QuadVal qv_mod1(const QuadVal& v);

std::string qv_str(const QuadVal& v);

}  // namespace nads
