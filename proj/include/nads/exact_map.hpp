#pragma once

// Exact self-maps of the model spaces, closed under composition.
//   PLMap:          piecewise linear map of [0,1] given by its breakpoint
//                   list; stored canonically (collinear interior breakpoints
//                   removed), so equality is list equality.
//   ShiftPower:     sigma^k on the shift space.
//   RotationOffset: x -> x + (p + q*alpha) mod 1 on the circle.
//   IdentityMap:    identity on any space.
//   ProductMap:     coordinatewise action on a finite power of a base space.
//
// All operations are exact; composition of PL maps refines the breakpoint
// grid by the preimages of the outer map's breakpoints.

#include "nads/point.hpp"

#include <optional>

namespace nads {

struct PLMap {
  // Breakpoints (x, f(x)) with strictly increasing x, first x = 0, last
  // x = 1, values in [0,1]. Canonical after construction.
  std::vector<std::pair<Rat, Rat>> pts;
};

// Validates and canonicalizes a breakpoint list.
PLMap make_pl(std::vector<std::pair<Rat, Rat>> pts);
Rat pl_eval(const PLMap& f, const Rat& x);
PLMap pl_compose(const PLMap& g, const PLMap& f);  // g after f
bool pl_is_identity(const PLMap& f);
// Strictly monotone and onto [0,1].
bool pl_is_homeo(const PLMap& f);
// +1 increasing, -1 decreasing, 0 otherwise.
int pl_orientation(const PLMap& f);
PLMap pl_inverse(const PLMap& f);  // requires pl_is_homeo

struct ShiftPower {
  long long k = 0;
};

struct RotationOffset {
  Rat p;        // reduced to [0,1)
  long long q;  // multiples of alpha
};

struct IdentityMap {};

struct ExactMap;

struct ProductMap {
  std::shared_ptr<const std::vector<ExactMap>> parts;
};

struct ExactMap {
  SpaceId space;
  std::variant<IdentityMap, PLMap, ShiftPower, RotationOffset, ProductMap> rep;
};

ExactMap identity_map(const SpaceId& space);
ExactMap interval_map(PLMap f);
ExactMap interval_map(std::vector<std::pair<Rat, Rat>> pts);
ExactMap shift_map(long long k);
ExactMap circle_map(const Rat& p, long long q);
ExactMap product_map(std::vector<ExactMap> parts);

Point apply(const ExactMap& f, const Point& x);
// g after f; throws on space mismatch.
ExactMap compose(const ExactMap& g, const ExactMap& f);
bool is_identity(const ExactMap& f);
// Semantic equality: identity representations of any shape compare equal,
// everything else compares canonically within its variant.
bool maps_equal(const ExactMap& f, const ExactMap& g);
bool is_invertible(const ExactMap& f);
ExactMap inverse(const ExactMap& f);

// Exact fixed point set. "all" short-circuits the listing; intervals are
// maximal segments of the diagonal (interval maps only).
struct FixedSet {
  bool all = false;
  std::vector<Point> points;
  std::vector<std::pair<Rat, Rat>> segments;
};
FixedSet fixed_points(const ExactMap& f);

std::string map_str(const ExactMap& f);

}  // namespace nads
