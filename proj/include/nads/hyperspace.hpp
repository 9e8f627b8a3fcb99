#pragma once

// The hyperspace of nonempty compact subsets, explored through finite sets:
// they are dense in the hyperspace over our spaces, closed under the induced
// maps, and their Hausdorff distance is an exact max-min computation.

#include "nads/hitting.hpp"

namespace nads {

struct FiniteCompact {
  SpaceId space;
  std::vector<Point> pts;  // sorted by point_less, duplicate-free, nonempty
};

FiniteCompact finite_compact(std::vector<Point> pts);

// max(max_a min_b d(a,b), max_b min_a d(a,b)).
QuadVal hausdorff(const FiniteCompact& a, const FiniteCompact& b);

// {f_1^n(a) : a in A}; collisions merge, so the result can shrink for
// non-invertible maps.
FiniteCompact induced_image(const NASystem& sys, const FiniteCompact& a, long long n);

// The Vietoris basic open <U_1, ..., U_k>: sets covered by the union and
// meeting every part.
struct VietorisOpen {
  SpaceId space;
  std::vector<BasicOpen> parts;
};

VietorisOpen vietoris_open(std::vector<BasicOpen> parts);
Tri vietoris_member(const FiniteCompact& a, const VietorisOpen& o);

// {n <= H : some seed A lands in O2 at time n}. Seeds must be members of O1
// (checked, throws otherwise); absence of hits is relative to the seed list.
HittingSet hyper_transitivity_times(const NASystem& sys, const VietorisOpen& o1,
                                    const VietorisOpen& o2, long long H,
                                    const std::vector<FiniteCompact>& seeds);

// All subsets of size <= max_size of the eps-net, as seed candidates.
std::vector<FiniteCompact> default_seed_sets(const SpaceId& space, const Rat& net_eps,
                                             int max_size);

}  // namespace nads
