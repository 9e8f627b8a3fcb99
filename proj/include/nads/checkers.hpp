#pragma once

// Horizon-bounded certifiers for the dynamical property hierarchy. Each
// checker composes the lower modules into a Verdict whose witness can be
// replayed independently (see report.hpp).
//
// Negative claims are only ever Refuted through structural certificates
// (all-isometry geometry, identity cycles, eventually-identity tails, exact
// map identities); a scan that merely fails to find something yields
// Inconclusive with the exhausted scale. The one deliberate exception is
// scale-parameterized combinatorics (gap/run/density classifications), whose
// refutations are exact statements about the window [1, H] and say so.
//
// Scan geometry: check_sensitive examines, for every net point, the open
// ball of radius 8*net_eps (interval, circle) or 2*net_eps (shift) around
// it, taking candidate pairs from the net. The sensitivity variants cap that
// radius at delta/2 so that structural identity-cycle refutations stay valid
// for neighborhoods of diameter <= delta.

#include "nads/hyperspace.hpp"
#include "nads/measures.hpp"

namespace nads {

Verdict check_transitive(const NASystem& sys, const std::vector<BasicOpen>& basis, long long H);

Verdict check_totally_transitive(const NASystem& sys, long long k_max,
                                 const std::vector<BasicOpen>& basis, long long H);

// Certified iff one n <= H works for all m pairs simultaneously.
Verdict check_weak_mixing(const NASystem& sys, int m,
                          const std::vector<std::pair<BasicOpen, BasicOpen>>& pairs,
                          long long H);

// Common time hitting both V and W from U.
Verdict check_banks(const NASystem& sys, const BasicOpen& u, const BasicOpen& v,
                    const BasicOpen& w, long long H);

Verdict check_sensitive(const NASystem& sys, const Rat& delta, const Rat& net_eps, long long H);

enum class SensVariant { Cofinite, Syndetic, Thick, Ergodic };

// Scale parameter: cofinite start N, syndetic gap a, thick run p; ergodic
// uses the rational density threshold rho instead.
Verdict check_sensitivity_variant(const NASystem& sys, SensVariant variant, const Rat& delta,
                                  const Rat& net_eps, long long H, long long scale_param,
                                  const Rat& rho = Rat(0));

// Certified iff the given opens' sensitivity time sets share a common n.
Verdict check_multi_sensitive(const NASystem& sys, const std::vector<BasicOpen>& opens,
                              const Rat& delta, long long H, const Rat& net_eps);

// Perturbations y_i of the given points (within eps, drawn from the net), a
// common n and an index i0 with, for every i,
//   d(f_1^n(x_i), f_1^n(y_i0)) > delta or d(f_1^n(y_i), f_1^n(x_i0)) > delta.
Verdict check_collective_sensitive(const NASystem& sys, const std::vector<Point>& points,
                                   const Rat& eps, const Rat& delta, long long H,
                                   const Rat& net_eps);

// Every net point within net_eps of a point certified periodic with some
// period n <= n_max (per check_periodic_point at depth K).
Verdict check_dense_periodic(const NASystem& sys, const Rat& net_eps, long long n_max,
                             long long K);

// For each basis open, a finite candidate F inside it and an n with an
// identity-segment certificate making f_1^{nk}(F) = F for all k.
Verdict check_dense_small_periodic(const NASystem& sys, const std::vector<BasicOpen>& basis,
                                   long long K);

// Conjunction: transitive + dense periodic + sensitive.
Verdict check_devaney(const NASystem& sys, const std::vector<BasicOpen>& basis, const Rat& delta,
                      const Rat& net_eps, long long H, long long n_max, long long K);

// Orbit eps-density of every net point (a scale-bounded stand-in for
// minimality; no invariant-subset search).
Verdict check_minimal_approx(const NASystem& sys, const Rat& net_eps, long long H);

}  // namespace nads
