#pragma once

// Arbitrary precision rational arithmetic used throughout the library.
// Every coordinate, breakpoint, radius and weight is a Rat; nothing in the
// core ever rounds to floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nads {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// Largest integer n with n <= q. cpp_int division truncates toward zero,
// so negative non-integers need one correction step.
inline Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int t = n / d;
  if (n % d != 0 && n < 0) t -= 1;
  return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

// Fractional part in [0, 1).
inline Rat mod1(const Rat& q) { return q - Rat(rat_floor(q)); }

// 2^e for possibly negative e.
inline Rat pow2(long long e) {
  if (e >= 0) return Rat(Int(1) << static_cast<unsigned>(e));
  return Rat(Int(1), Int(1) << static_cast<unsigned>(-e));
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Parses "a/b" or a bare integer "a". Throws std::invalid_argument on
// malformed input or zero denominator.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

}  // namespace nads
