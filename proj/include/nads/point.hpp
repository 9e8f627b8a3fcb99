#pragma once

// The three model spaces and their finitely presented points.
//   Interval: [0,1] with |x - y|, points are rationals.
//   Shift:    periodic two-sided binary sequences with the weighted metric
//             from word.hpp (diameter 3).
//   Circle:   R/Z with arc distance, points are (p, q) meaning (p + q*alpha)
//             mod 1. The representation is exact and unique once p is
//             reduced to [0,1): distinct (p, q) with equal angles would make
//             alpha rational.
// Products of m copies of one base space carry the max metric.

#include "nads/alpha.hpp"
#include "nads/word.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace nads {

enum class SpaceKind { Interval, Shift, Circle };

struct SpaceId {
  SpaceKind kind = SpaceKind::Interval;
  int arity = 1;  // > 1 means the product of arity copies of kind

  bool operator==(const SpaceId& o) const { return kind == o.kind && arity == o.arity; }
  bool operator!=(const SpaceId& o) const { return !(*this == o); }
};

std::string space_str(const SpaceId& s);

struct CircleCoord {
  Rat p;        // reduced to [0,1)
  long long q;  // multiples of alpha

  QuadVal angle() const { return {p, q}; }
};

struct Point;

struct ProductPoint {
  std::shared_ptr<const std::vector<Point>> parts;
};

struct Point {
  SpaceId space;
  std::variant<Rat, PeriodicWord, CircleCoord, ProductPoint> v;

  const Rat& interval() const { return std::get<Rat>(v); }
  const PeriodicWord& word() const { return std::get<PeriodicWord>(v); }
  const CircleCoord& circle() const { return std::get<CircleCoord>(v); }
  const std::vector<Point>& parts() const { return *std::get<ProductPoint>(v).parts; }
};

// Factories validate their arguments (interval range, word alphabet) and
// canonicalize (word to minimal period, circle offset mod 1).
Point interval_point(const Rat& x);
Point shift_point(const std::string& word);
Point shift_point(PeriodicWord w);
Point circle_point(const Rat& p, long long q);
Point product_point(std::vector<Point> parts);

bool point_eq(const Point& a, const Point& b);
// Total order used to canonicalize point sets; compatible with point_eq.
bool point_less(const Point& a, const Point& b);

// Exact distance. Rational except on the circle, where it lives in Q + Q*alpha.
QuadVal distance(const Point& a, const Point& b);

std::string point_str(const Point& p);

}  // namespace nads
