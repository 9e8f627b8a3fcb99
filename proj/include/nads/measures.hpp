#pragma once

// Finitely supported probability measures with exact rational weights,
// pushforward along the system, the Prohorov metric (bracketed by bisection
// with an exact subset-enumeration check), and measure-open hitting sets.

#include "nads/hitting.hpp"

namespace nads {

struct AtomicMeasure {
  SpaceId space;
  std::vector<std::pair<Point, Rat>> atoms;  // sorted by point, weights > 0, sum 1
};

AtomicMeasure atomic_measure(std::vector<std::pair<Point, Rat>> atoms);
AtomicMeasure dirac(const Point& x);
// Equal weights 1/n, duplicates merged.
AtomicMeasure empirical(const std::vector<Point>& points);

AtomicMeasure pushforward_map(const ExactMap& f, const AtomicMeasure& mu);
AtomicMeasure pushforward(const NASystem& sys, const AtomicMeasure& mu, long long n);

// Total weight of the atoms inside u; throws PrecisionError if any atom's
// membership is undecided.
Rat measure_of(const AtomicMeasure& mu, const OpenSet& u, const std::string& context);

// The one-sided Prohorov condition at radius eps:
//   mu(A) <= nu(N(A, eps)) + eps for all A subset supp(mu), and symmetrically
//   with mu and nu swapped. Quantifying over support subsets suffices for
// atomic measures (adding null points to A only enlarges N(A, eps)). The
// enlargement N(A, eps) is the strict open one. Exposed for oracle tests.
bool prohorov_check(const AtomicMeasure& mu, const AtomicMeasure& nu, const Rat& eps);

// Enclosure [lo, hi] of inf{eps : prohorov_check} with hi - lo <= tol, by
// bisection on [0, 1] (the check is monotone in eps). Throws
// std::invalid_argument past the atom cap (default 12 per measure; subset
// enumeration is exponential).
std::pair<Rat, Rat> prohorov(const AtomicMeasure& mu, const AtomicMeasure& nu, const Rat& tol);

// {mu : mu(base) > threshold} for each conjunct.
struct MeasureOpen {
  SpaceId space;
  std::vector<std::pair<BasicOpen, Rat>> conjuncts;  // thresholds in (0,1)
};

MeasureOpen measure_open(BasicOpen base, const Rat& threshold);
MeasureOpen measure_open(std::vector<std::pair<BasicOpen, Rat>> conjuncts);
bool measure_open_member(const AtomicMeasure& mu, const MeasureOpen& o);

// {n <= H : some seed's pushforward at time n lies in O2}. Seeds must lie in
// O1 (checked); negatives are seed-relative.
HittingSet measure_transitivity_times(const NASystem& sys, const MeasureOpen& o1,
                                      const MeasureOpen& o2, long long H,
                                      const std::vector<AtomicMeasure>& seeds);

// Empirical measures over all subsets of size <= max_size of the eps-net.
std::vector<AtomicMeasure> default_measure_seeds(const SpaceId& space, const Rat& net_eps,
                                                 int max_size);

}  // namespace nads
