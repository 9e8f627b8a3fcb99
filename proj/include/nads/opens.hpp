#pragma once

// Canonical open sets per space, with exact membership, intersection,
// image and preimage. Anything that cannot be decided exactly comes back
// three-valued; callers that need a definite answer use the require_*
// helpers, which turn Unknown into a PrecisionError with context.
//
//   IntervalOpen  subinterval of [0,1], relatively open by default; the
//                 closedness flags exist so images of non-invertible PL maps
//                 (which fold endpoints onto interior values) stay exact.
//   Cylinder     all sequences matching a finite word at fixed coordinates.
//   Arc          open arc of radius r < 1/2 around a circle point.
//
// An OpenSet is a finite union of basic pieces of one space.

#include "nads/exact_map.hpp"

#include <optional>

namespace nads {

enum class Tri { False, Unknown, True };

struct IntervalOpen {
  Rat lo, hi;
  bool closed_lo = false, closed_hi = false;
};

struct Cylinder {
  long long anchor = 0;  // word fixes coordinates anchor .. anchor+|word|-1
  std::string word;
};

struct Arc {
  CircleCoord center;
  Rat radius;  // in (0, 1/2)
};

struct BasicOpen {
  SpaceId space;
  std::variant<IntervalOpen, Cylinder, Arc> rep;
};

struct OpenSet {
  SpaceId space;
  std::vector<BasicOpen> pieces;
};

// Factories validate ranges and reject empty sets.
BasicOpen interval_open(const Rat& lo, const Rat& hi, bool closed_lo = false,
                        bool closed_hi = false);
BasicOpen cylinder_open(long long anchor, const std::string& word);
BasicOpen arc_open(const Rat& p, long long q, const Rat& radius);
BasicOpen arc_open(const CircleCoord& center, const Rat& radius);
OpenSet open_set(BasicOpen piece);
OpenSet open_set(std::vector<BasicOpen> pieces);
OpenSet whole_space(const SpaceId& space);

Tri member(const Point& x, const BasicOpen& u);
Tri member(const Point& x, const OpenSet& u);
// Unknown becomes a PrecisionError naming the context.
bool require_member(const Point& x, const OpenSet& u, const std::string& context);

Tri intersects(const BasicOpen& u, const BasicOpen& v);
Tri intersects(const OpenSet& u, const OpenSet& v);
bool require_intersects(const OpenSet& u, const OpenSet& v, const std::string& context);

// A concrete point of u cap v when the intersection is decidably nonempty.
std::optional<Point> witness_point(const BasicOpen& u, const BasicOpen& v);

// Exact image of an open under a map. Homeomorphism variants map basic
// pieces to basic pieces; non-invertible PL maps return per-segment images
// whose pieces may be closed at folded endpoints.
OpenSet image_open(const ExactMap& f, const BasicOpen& u);
OpenSet image_open(const ExactMap& f, const OpenSet& u);
OpenSet preimage_open(const ExactMap& f, const OpenSet& u);

// Upper bound on the diameter of a piece (exact supremum for intervals and
// arcs; for cylinders the sup over the unconstrained coordinates).
Rat diam_upper(const BasicOpen& u);

// Finite eps-net: every point of the space lies within eps of a net point.
// Interval: grid of mesh <= eps. Circle: equally spaced rational angles.
// Shift: all words of minimal period <= 2T+1 where T is minimal with
// 4*2^{-T} <= eps; truncating any sequence to [-T, T] and extending with
// period 2T+1 lands within 2^{1-T} <= eps/2 of it.
std::vector<Point> epsilon_net(const SpaceId& space, const Rat& eps);

// Open ball around a point as an OpenSet. Exact on interval and circle; on
// the shift space a sound under-approximation by cylinders (every point of
// the result is within radius, and every point closer than radius minus the
// cylinder tail 2^{1-T} is covered).
OpenSet ball_open(const Point& center, const Rat& radius);

// Default bases used by checkers and the CLI.
std::vector<BasicOpen> interval_basis(const Rat& mesh);
std::vector<BasicOpen> shift_basis(long long half_range);
std::vector<BasicOpen> circle_basis(const Rat& radius);
std::vector<BasicOpen> default_basis(const SpaceId& space);

std::string open_str(const BasicOpen& u);
std::string open_str(const OpenSet& u);

}  // namespace nads
