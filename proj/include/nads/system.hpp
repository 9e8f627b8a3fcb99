#pragma once

// Non-autonomous systems: a time-indexed sequence of exact maps f_1, f_2, ...
// on one space, iterated as x_{n+1} = f_n(x_n). The n-step action from time s
// is the composite segment f_s^n = f_{s+n-1} o ... o f_s.
//
// Structural metadata drives the certificate logic downstream:
//   period          rule(n + m) = rule(n) for all n
//   identity_cycle  segment(1, k*L) is the identity for every k >= 1
//   identity_from   rule(n) is the identity for all n >= the given index
//   all_isometries  every step map preserves the metric
// Flags are declared by constructors and verified within the horizon at
// fixture build time; they are what turns a bounded scan into an unbounded
// refutation or certification.

#include "nads/exact_map.hpp"
#include "nads/verdict.hpp"

#include <functional>
#include <optional>

namespace nads {

struct RunConfig {
  long long horizon_cap = 512;
};

RunConfig& run_config();

struct NASystem {
  SpaceId space;
  std::function<ExactMap(long long)> rule;  // time index n >= 1
  std::string name;
  std::optional<long long> period;
  std::optional<long long> identity_cycle;
  std::optional<long long> identity_from;
  std::optional<std::vector<ExactMap>> generators;
  bool all_isometries = false;
};

NASystem constant_system(ExactMap f, std::string name);
NASystem periodic_system(std::vector<ExactMap> maps, std::string name);

// rule(n) with bounds checking: 1 <= n <= horizon cap.
ExactMap step_map(const NASystem& sys, long long n);

// f_s^len as one ExactMap. segment(sys, s, 0) is the identity. The end index
// s + len - 1 must stay within the horizon cap.
ExactMap segment(const NASystem& sys, long long s, long long len);
// Same composition without the cap; used by fixture self-checks that look
// past the configured horizon.
ExactMap segment_raw(const NASystem& sys, long long s, long long len);

// f_1^n(x) by sequential application.
Point iterate(const NASystem& sys, const Point& x, long long n);
// [x, f_1^1(x), ..., f_1^n(x)].
std::vector<Point> orbit(const NASystem& sys, const Point& x, long long n);

// The k-th iterate system: n-th map is segment(sys, k*(n-1)+1, k).
NASystem kth_iterate_system(const NASystem& sys, long long k);

// m-fold product acting coordinatewise.
NASystem product_system(const NASystem& sys, int m);

// g = f_m o ... o f_1 for an m-periodic system.
ExactMap period_composition(const NASystem& sys);

// Is x periodic with period n, i.e. f_1^{nk}(x) = x for every k >= 1?
// Checks k <= K exactly, then looks for a structural certificate that
// extends the identity to all k: an identity segment cycle that divides n,
// or (for m-periodic systems with m | n) the autonomous power argument
// g^{n/m}(x) = x. Without a certificate the verdict is HoldsUpToBound.
Verdict check_periodic_point(const NASystem& sys, const Point& x, long long n, long long K);

}  // namespace nads
