#pragma once

// Horizon-bounded hitting-time sets and their combinatorial classification.
// N(U,V) collects the times n <= H where the n-step image of U meets V;
// N(U,delta) the times where two net points of U have separated beyond
// delta. All classifications are explicitly "at scale H": the library never
// claims the limit statement, it reports the window it actually saw.

#include "nads/opens.hpp"
#include "nads/system.hpp"

namespace nads {

enum class HitKind { Transitivity, Sensitivity };

struct HittingSet {
  long long horizon = 0;
  std::vector<long long> members;  // sorted, duplicate-free, within [1, horizon]
  HitKind kind = HitKind::Transitivity;

  bool contains(long long n) const;
  // Longest block of consecutive non-members inside [1, horizon].
  long long max_gap() const;
  // Longest run of consecutive members.
  long long max_run() const;
  // Prefix densities |members cap [1,n]| / n for n = 1..horizon.
  std::vector<Rat> density_profile() const;
};

HittingSet make_hitting_set(long long horizon, std::vector<long long> members, HitKind kind);

// {n <= H : segment(sys,1,n)(U) meets V}, by incremental exact images.
HittingSet transitivity_times(const NASystem& sys, const OpenSet& u, const OpenSet& v,
                              long long H);

// {n <= H : some pair x,y of net points lying in U has
//  d(f_1^n(x), f_1^n(y)) > delta}. Membership is witnessed by net pairs;
// absence is relative to the net (net_eps is recorded by callers).
HittingSet sensitivity_times(const NASystem& sys, const OpenSet& u, const Rat& delta,
                             long long H, const Rat& net_eps);

struct ClassVerdict {
  std::string property;  // cofinite | syndetic | thick | upper-density
  bool satisfied = false;
  nlohmann::json details;  // parameters plus the deciding witness or record
};

// [N, H] entirely contained in the members.
ClassVerdict classify_cofinite(const HittingSet& hs, long long N);
// Every window {i, ..., i+a} inside [1, H] meets the members.
ClassVerdict classify_syndetic(const HittingSet& hs, long long a);
// Some run of p consecutive members exists.
ClassVerdict classify_thick(const HittingSet& hs, long long p);
// |members| / H >= rho; the prefix-density profile is attached.
ClassVerdict classify_upper_density(const HittingSet& hs, const Rat& rho);

}  // namespace nads
