#include "nads/point.hpp"

#include <stdexcept>

namespace nads {

std::string space_str(const SpaceId& s) {
  std::string base;
  switch (s.kind) {
    case SpaceKind::Interval: base = "interval"; break;
    case SpaceKind::Shift: base = "shift"; break;
    case SpaceKind::Circle: base = "circle"; break;
  }
  if (s.arity > 1) base += "^" + std::to_string(s.arity);
  return base;
}

Point interval_point(const Rat& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("interval point outside [0,1]: " + rat_str(x));
  return Point{{SpaceKind::Interval, 1}, x};
}

Point shift_point(const std::string& word) { return shift_point(PeriodicWord::from_string(word)); }

Point shift_point(PeriodicWord w) { return Point{{SpaceKind::Shift, 1}, std::move(w)}; }

Point circle_point(const Rat& p, long long q) {
  return Point{{SpaceKind::Circle, 1}, CircleCoord{mod1(p), q}};
}

Point product_point(std::vector<Point> parts) {
  if (parts.empty()) throw std::invalid_argument("product point needs at least one part");
  SpaceId base = parts.front().space;
  if (base.arity != 1) throw std::invalid_argument("product parts must be base points");
  for (const auto& p : parts) {
    if (!(p.space == base)) throw std::invalid_argument("product parts live in different spaces");
  }
  SpaceId sp{base.kind, static_cast<int>(parts.size())};
  return Point{sp, ProductPoint{std::make_shared<const std::vector<Point>>(std::move(parts))}};
}

bool point_eq(const Point& a, const Point& b) {
  if (a.space != b.space) return false;
  if (a.space.arity > 1) {
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    for (size_t i = 0; i < pa.size(); ++i) {
      if (!point_eq(pa[i], pb[i])) return false;
    }
    return true;
  }
  switch (a.space.kind) {
    case SpaceKind::Interval: return a.interval() == b.interval();
    case SpaceKind::Shift: return a.word() == b.word();
    case SpaceKind::Circle: {
      const auto& ca = a.circle();
      const auto& cb = b.circle();
      return ca.q == cb.q && ca.p == cb.p;
    }
  }
  return false;
}

bool point_less(const Point& a, const Point& b) {
  if (a.space != b.space) throw std::invalid_argument("ordering points of different spaces");
  if (a.space.arity > 1) {
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    for (size_t i = 0; i < pa.size(); ++i) {
      if (point_less(pa[i], pb[i])) return true;
      if (point_less(pb[i], pa[i])) return false;
    }
    return false;
  }
  switch (a.space.kind) {
    case SpaceKind::Interval: return a.interval() < b.interval();
    case SpaceKind::Shift: return a.word() < b.word();
    case SpaceKind::Circle: {
      // Lexicographic on (q, p); any total order compatible with equality
      // works for canonicalization, geometry never consults it.
      const auto& ca = a.circle();
      const auto& cb = b.circle();
      if (ca.q != cb.q) return ca.q < cb.q;
      return ca.p < cb.p;
    }
  }
  return false;
}

QuadVal distance(const Point& a, const Point& b) {
  if (a.space != b.space) throw std::invalid_argument("distance between different spaces");
  if (a.space.arity > 1) {
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    QuadVal best = distance(pa[0], pb[0]);
    for (size_t i = 1; i < pa.size(); ++i) best = qv_max(best, distance(pa[i], pb[i]));
    return best;
  }
  switch (a.space.kind) {
    case SpaceKind::Interval: return QuadVal(rat_abs(a.interval() - b.interval()));
    case SpaceKind::Shift: return QuadVal(shift_distance(a.word(), b.word()));
    case SpaceKind::Circle: {
      // Arc distance: reduce the angle difference to [0,1), then take the
      // shorter way around.
      QuadVal t = qv_mod1(a.circle().angle() - b.circle().angle());
      return qv_min(t, QuadVal(Rat(1)) - t);
    }
  }
  throw std::logic_error("unreachable space kind");
}

std::string point_str(const Point& p) {
  if (p.space.arity > 1) {
    std::string out = "(";
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ", ";
      out += point_str(parts[i]);
    }
    return out + ")";
  }
  switch (p.space.kind) {
    case SpaceKind::Interval: return rat_str(p.interval());
    case SpaceKind::Shift: return "(" + p.word().word() + ")^inf";
    case SpaceKind::Circle: return qv_str(p.circle().angle()) + " mod 1";
  }
  return "?";
}

}  // namespace nads
