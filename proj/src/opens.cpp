#include "nads/opens.hpp"

#include <algorithm>
#include <sstream>

namespace nads {

namespace {

// Endpoint membership for an interval piece, honoring the closedness flags.
bool contains_point(const IntervalOpen& u, const Rat& x) {
  bool above = x > u.lo || (x == u.lo && u.closed_lo);
  bool below = x < u.hi || (x == u.hi && u.closed_hi);
  return above && below;
}

void check_space(const SpaceId& a, const SpaceId& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": space mismatch");
}

Point arc_center_point(const Arc& a) { return circle_point(a.center.p, a.center.q); }

// Rational strictly between two QuadVals with x < y, found by refining both
// enclosures until they separate.
Rat rational_between(const QuadVal& x, const QuadVal& y) {
  const auto& cfg = alpha_config();
  for (long long bits = cfg.initial_bits; bits <= cfg.max_bits; bits *= 2) {
    auto [xlo, xhi] = x.enclosure(bits);
    auto [ylo, yhi] = y.enclosure(bits);
    if (xhi < ylo) return (xhi + ylo) / 2;
  }
  throw PrecisionError("no rational separating " + qv_str(x) + " and " + qv_str(y));
}

}  // namespace

BasicOpen interval_open(const Rat& lo, const Rat& hi, bool closed_lo, bool closed_hi) {
  if (lo < 0 || hi > 1) throw std::invalid_argument("interval piece must lie in [0,1]");
  if (lo > hi || (lo == hi && !(closed_lo && closed_hi))) {
    throw std::invalid_argument("interval piece is empty");
  }
  return {SpaceId{SpaceKind::Interval, 1}, IntervalOpen{lo, hi, closed_lo, closed_hi}};
}

BasicOpen cylinder_open(long long anchor, const std::string& word) {
  if (word.empty()) throw std::invalid_argument("cylinder word must be nonempty");
  for (char c : word) {
    if (c != '0' && c != '1') throw std::invalid_argument("cylinder word must be over {0,1}");
  }
  return {SpaceId{SpaceKind::Shift, 1}, Cylinder{anchor, word}};
}

BasicOpen arc_open(const Rat& p, long long q, const Rat& radius) {
  if (radius <= 0 || radius >= Rat(1, 2)) {
    throw std::invalid_argument("arc radius must lie in (0, 1/2)");
  }
  Point c = circle_point(p, q);
  return {SpaceId{SpaceKind::Circle, 1}, Arc{c.circle(), radius}};
}

BasicOpen arc_open(const CircleCoord& center, const Rat& radius) {
  return arc_open(center.p, center.q, radius);
}

OpenSet open_set(BasicOpen piece) {
  OpenSet u;
  u.space = piece.space;
  u.pieces.push_back(std::move(piece));
  return u;
}

OpenSet open_set(std::vector<BasicOpen> pieces) {
  if (pieces.empty()) throw std::invalid_argument("open set needs at least one piece");
  OpenSet u;
  u.space = pieces.front().space;
  for (const auto& p : pieces) check_space(p.space, u.space, "open_set");
  u.pieces = std::move(pieces);
  return u;
}

OpenSet whole_space(const SpaceId& space) {
  if (space.arity != 1) throw std::invalid_argument("whole_space: base spaces only");
  switch (space.kind) {
    case SpaceKind::Interval:
      return open_set(interval_open(Rat(0), Rat(1), true, true));
    case SpaceKind::Shift:
      return open_set({cylinder_open(0, "0"), cylinder_open(0, "1")});
    case SpaceKind::Circle:
      // Two arcs of radius 3/8 around antipodal centers cover the circle.
      return open_set({arc_open(Rat(0), 0, Rat(3, 8)), arc_open(Rat(1, 2), 0, Rat(3, 8))});
  }
  throw std::logic_error("unreachable");
}

Tri member(const Point& x, const BasicOpen& u) {
  check_space(x.space, u.space, "member");
  if (const auto* iv = std::get_if<IntervalOpen>(&u.rep)) {
    return contains_point(*iv, x.interval()) ? Tri::True : Tri::False;
  }
  if (const auto* cyl = std::get_if<Cylinder>(&u.rep)) {
    const PeriodicWord& w = x.word();
    for (size_t j = 0; j < cyl->word.size(); ++j) {
      if (w.at(cyl->anchor + static_cast<long long>(j)) != cyl->word[j]) return Tri::False;
    }
    return Tri::True;
  }
  const Arc& a = std::get<Arc>(u.rep);
  try {
    QuadVal gap = distance(x, arc_center_point(a)) - QuadVal(a.radius);
    return qv_sign(gap) < 0 ? Tri::True : Tri::False;
  } catch (const PrecisionError&) {
    return Tri::Unknown;
  }
}

Tri member(const Point& x, const OpenSet& u) {
  check_space(x.space, u.space, "member");
  bool unknown = false;
  for (const auto& piece : u.pieces) {
    Tri t = member(x, piece);
    if (t == Tri::True) return Tri::True;
    if (t == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::False;
}

bool require_member(const Point& x, const OpenSet& u, const std::string& context) {
  Tri t = member(x, u);
  if (t == Tri::Unknown) {
    throw PrecisionError(context + ": membership of " + point_str(x) + " in " + open_str(u) +
                         " undecided");
  }
  return t == Tri::True;
}

Tri intersects(const BasicOpen& u, const BasicOpen& v) {
  check_space(u.space, v.space, "intersects");
  if (const auto* a = std::get_if<IntervalOpen>(&u.rep)) {
    const auto& b = std::get<IntervalOpen>(v.rep);
    Rat L = std::max(a->lo, b.lo), R = std::min(a->hi, b.hi);
    if (L < R) return Tri::True;
    if (L > R) return Tri::False;
    return (contains_point(*a, L) && contains_point(b, L)) ? Tri::True : Tri::False;
  }
  if (const auto* a = std::get_if<Cylinder>(&u.rep)) {
    const auto& b = std::get<Cylinder>(v.rep);
    long long lo = std::max(a->anchor, b.anchor);
    long long hi = std::min(a->anchor + static_cast<long long>(a->word.size()),
                            b.anchor + static_cast<long long>(b.word.size()));
    for (long long i = lo; i < hi; ++i) {
      if (a->word[static_cast<size_t>(i - a->anchor)] !=
          b.word[static_cast<size_t>(i - b.anchor)]) {
        return Tri::False;
      }
    }
    return Tri::True;  // compatible constraints always extend to a periodic point
  }
  const Arc& a = std::get<Arc>(u.rep);
  const Arc& b = std::get<Arc>(v.rep);
  try {
    QuadVal t = distance(arc_center_point(a), arc_center_point(b));
    QuadVal sum(a.radius + b.radius);
    if (qv_sign(t - sum) < 0) return Tri::True;
    // The arcs may still meet the long way round when the radii are large.
    if (qv_sign((QuadVal(Rat(1)) - t) - sum) < 0) return Tri::True;
    return Tri::False;
  } catch (const PrecisionError&) {
    return Tri::Unknown;
  }
}

Tri intersects(const OpenSet& u, const OpenSet& v) {
  check_space(u.space, v.space, "intersects");
  bool unknown = false;
  for (const auto& a : u.pieces) {
    for (const auto& b : v.pieces) {
      Tri t = intersects(a, b);
      if (t == Tri::True) return Tri::True;
      if (t == Tri::Unknown) unknown = true;
    }
  }
  return unknown ? Tri::Unknown : Tri::False;
}

bool require_intersects(const OpenSet& u, const OpenSet& v, const std::string& context) {
  Tri t = intersects(u, v);
  if (t == Tri::Unknown) {
    throw PrecisionError(context + ": intersection of " + open_str(u) + " and " + open_str(v) +
                         " undecided");
  }
  return t == Tri::True;
}

std::optional<Point> witness_point(const BasicOpen& u, const BasicOpen& v) {
  if (intersects(u, v) != Tri::True) return std::nullopt;
  if (const auto* a = std::get_if<IntervalOpen>(&u.rep)) {
    const auto& b = std::get<IntervalOpen>(v.rep);
    Rat L = std::max(a->lo, b.lo), R = std::min(a->hi, b.hi);
    return interval_point(L < R ? (L + R) / 2 : L);
  }
  if (const auto* a = std::get_if<Cylinder>(&u.rep)) {
    const auto& b = std::get<Cylinder>(v.rep);
    long long m = std::min(a->anchor, b.anchor);
    long long M = std::max(a->anchor + static_cast<long long>(a->word.size()),
                           b.anchor + static_cast<long long>(b.word.size()));
    long long L = M - m;
    // Fill the hull with both constraints (known compatible), zeros elsewhere,
    // then rotate so index 0 of the stored word is absolute coordinate 0.
    std::string hull(static_cast<size_t>(L), '0');
    for (size_t j = 0; j < a->word.size(); ++j) {
      hull[static_cast<size_t>(a->anchor - m + static_cast<long long>(j))] = a->word[j];
    }
    for (size_t j = 0; j < b.word.size(); ++j) {
      hull[static_cast<size_t>(b.anchor - m + static_cast<long long>(j))] = b.word[j];
    }
    std::string rotated(static_cast<size_t>(L), '0');
    for (long long j = 0; j < L; ++j) {
      long long src = ((j - m) % L + L) % L;
      rotated[static_cast<size_t>(j)] = hull[static_cast<size_t>(src)];
    }
    return shift_point(rotated);
  }
  const Arc& a = std::get<Arc>(u.rep);
  const Arc& b = std::get<Arc>(v.rep);
  // Lift b's center near a's: try both representatives of the angular
  // difference and intersect the lifted intervals around 0.
  QuadVal delta = qv_mod1(b.center.angle() - a.center.angle());
  for (const QuadVal& lift : {delta, delta - QuadVal(Rat(1))}) {
    QuadVal L = qv_max(QuadVal(-a.radius), lift - QuadVal(b.radius));
    QuadVal R = qv_min(QuadVal(a.radius), lift + QuadVal(b.radius));
    if (qv_sign(R - L) > 0) {
      Rat offset = rational_between(L, R);
      return circle_point(mod1(a.center.p + offset), a.center.q);
    }
  }
  return std::nullopt;
}

namespace {

// Clip [piece domain] against an interval open and push the image through one
// linear piece of a PL map.
void pl_image_pieces(const PLMap& f, const IntervalOpen& j, std::vector<BasicOpen>& out) {
  for (size_t i = 0; i + 1 < f.pts.size(); ++i) {
    const Rat& a = f.pts[i].first;
    const Rat& b = f.pts[i + 1].first;
    const Rat& fa = f.pts[i].second;
    const Rat& fb = f.pts[i + 1].second;
    Rat L = std::max(j.lo, a), R = std::min(j.hi, b);
    if (L > R) continue;
    bool L_in = contains_point(j, L), R_in = contains_point(j, R);
    if (L == R) {
      if (!L_in) continue;
      Rat y = pl_eval(f, L);
      out.push_back(interval_open(y, y, true, true));
      continue;
    }
    if (fa == fb) {
      out.push_back(interval_open(fa, fa, true, true));
      continue;
    }
    Rat slope = (fb - fa) / (b - a);
    Rat yL = fa + slope * (L - a), yR = fa + slope * (R - a);
    if (slope > 0) out.push_back(interval_open(yL, yR, L_in, R_in));
    else out.push_back(interval_open(yR, yL, R_in, L_in));
  }
}

// Preimage of an interval open through one linear piece.
void pl_preimage_pieces(const PLMap& f, const IntervalOpen& j, std::vector<BasicOpen>& out) {
  for (size_t i = 0; i + 1 < f.pts.size(); ++i) {
    const Rat& a = f.pts[i].first;
    const Rat& b = f.pts[i + 1].first;
    const Rat& fa = f.pts[i].second;
    const Rat& fb = f.pts[i + 1].second;
    if (fa == fb) {
      if (contains_point(j, fa)) out.push_back(interval_open(a, b, true, true));
      continue;
    }
    Rat m = std::min(fa, fb), M = std::max(fa, fb);
    Rat L = std::max(j.lo, m), R = std::min(j.hi, M);
    if (L > R) continue;
    bool L_in = contains_point(j, L), R_in = contains_point(j, R);
    if (L == R && !L_in) continue;
    Rat slope = (fb - fa) / (b - a);
    Rat xL = a + (L - fa) / slope, xR = a + (R - fa) / slope;
    if (slope > 0) out.push_back(interval_open(xL, xR, L_in, R_in));
    else out.push_back(interval_open(xR, xL, R_in, L_in));
  }
}

// Coalesce overlapping or touching interval pieces so repeated images of
// folding maps cannot blow up the piece count across a long horizon.
void merge_interval_pieces(OpenSet& u) {
  if (u.space.kind != SpaceKind::Interval || u.pieces.size() < 2) return;
  std::sort(u.pieces.begin(), u.pieces.end(), [](const BasicOpen& a, const BasicOpen& b) {
    const auto& x = std::get<IntervalOpen>(a.rep);
    const auto& y = std::get<IntervalOpen>(b.rep);
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.closed_lo && !y.closed_lo;
  });
  std::vector<BasicOpen> merged;
  IntervalOpen cur = std::get<IntervalOpen>(u.pieces.front().rep);
  for (size_t i = 1; i < u.pieces.size(); ++i) {
    const auto& next = std::get<IntervalOpen>(u.pieces[i].rep);
    bool joins = next.lo < cur.hi || (next.lo == cur.hi && (cur.closed_hi || next.closed_lo));
    if (joins) {
      if (next.hi > cur.hi) {
        cur.hi = next.hi;
        cur.closed_hi = next.closed_hi;
      } else if (next.hi == cur.hi) {
        cur.closed_hi = cur.closed_hi || next.closed_hi;
      }
    } else {
      merged.push_back(interval_open(cur.lo, cur.hi, cur.closed_lo, cur.closed_hi));
      cur = next;
    }
  }
  merged.push_back(interval_open(cur.lo, cur.hi, cur.closed_lo, cur.closed_hi));
  u.pieces = std::move(merged);
}

}  // namespace

OpenSet image_open(const ExactMap& f, const BasicOpen& u) {
  check_space(f.space, u.space, "image_open");
  if (std::holds_alternative<IdentityMap>(f.rep)) return open_set(u);
  if (const auto* s = std::get_if<ShiftPower>(&f.rep)) {
    const auto& c = std::get<Cylinder>(u.rep);
    return open_set(cylinder_open(c.anchor - s->k, c.word));
  }
  if (const auto* r = std::get_if<RotationOffset>(&f.rep)) {
    const auto& a = std::get<Arc>(u.rep);
    return open_set(arc_open(mod1(a.center.p + r->p), a.center.q + r->q, a.radius));
  }
  if (const auto* pl = std::get_if<PLMap>(&f.rep)) {
    std::vector<BasicOpen> pieces;
    pl_image_pieces(*pl, std::get<IntervalOpen>(u.rep), pieces);
    if (pieces.empty()) throw std::logic_error("image of a nonempty open is nonempty");
    OpenSet out = open_set(std::move(pieces));
    merge_interval_pieces(out);
    return out;
  }
  throw std::invalid_argument("image_open: product spaces have no basic opens");
}

OpenSet image_open(const ExactMap& f, const OpenSet& u) {
  check_space(f.space, u.space, "image_open");
  if (u.pieces.empty()) return u;
  std::vector<BasicOpen> pieces;
  for (const auto& piece : u.pieces) {
    OpenSet img = image_open(f, piece);
    pieces.insert(pieces.end(), img.pieces.begin(), img.pieces.end());
  }
  OpenSet out = open_set(std::move(pieces));
  merge_interval_pieces(out);
  return out;
}

OpenSet preimage_open(const ExactMap& f, const OpenSet& u) {
  check_space(f.space, u.space, "preimage_open");
  std::vector<BasicOpen> pieces;
  for (const auto& piece : u.pieces) {
    if (std::holds_alternative<IdentityMap>(f.rep)) {
      pieces.push_back(piece);
    } else if (const auto* s = std::get_if<ShiftPower>(&f.rep)) {
      const auto& c = std::get<Cylinder>(piece.rep);
      pieces.push_back(cylinder_open(c.anchor + s->k, c.word));
    } else if (const auto* r = std::get_if<RotationOffset>(&f.rep)) {
      const auto& a = std::get<Arc>(piece.rep);
      pieces.push_back(arc_open(mod1(a.center.p - r->p), a.center.q - r->q, a.radius));
    } else if (const auto* pl = std::get_if<PLMap>(&f.rep)) {
      pl_preimage_pieces(*pl, std::get<IntervalOpen>(piece.rep), pieces);
    } else {
      throw std::invalid_argument("preimage_open: product spaces have no basic opens");
    }
  }
  if (pieces.empty()) return OpenSet{u.space, {}};  // open set outside the range
  OpenSet out = open_set(std::move(pieces));
  merge_interval_pieces(out);
  return out;
}

Rat diam_upper(const BasicOpen& u) {
  if (const auto* iv = std::get_if<IntervalOpen>(&u.rep)) return iv->hi - iv->lo;
  if (const auto* a = std::get_if<Arc>(&u.rep)) return std::min(Rat(2 * a->radius), Rat(1, 2));
  const auto& c = std::get<Cylinder>(u.rep);
  // Points of a cylinder agree on the window; the rest can mismatch freely.
  Rat window(0);
  for (long long j = 0; j < static_cast<long long>(c.word.size()); ++j) {
    long long i = c.anchor + j;
    window += pow2(-(i < 0 ? -i : i));
  }
  return Rat(3) - window;
}

std::vector<Point> epsilon_net(const SpaceId& space, const Rat& eps) {
  if (space.arity != 1) throw std::invalid_argument("epsilon_net: base spaces only");
  if (eps <= 0) throw std::invalid_argument("epsilon_net: eps must be positive");
  std::vector<Point> net;
  switch (space.kind) {
    case SpaceKind::Interval: {
      Int m = rat_ceil(1 / eps);
      for (Int j = 0; j <= m; ++j) net.push_back(interval_point(Rat(j, m)));
      return net;
    }
    case SpaceKind::Circle: {
      Int m = rat_ceil(1 / eps);
      for (Int j = 0; j < m; ++j) net.push_back(circle_point(Rat(j, m), 0));
      return net;
    }
    case SpaceKind::Shift: {
      // Truncating a sequence to [-T, T] and extending with period 2T+1 moves
      // it by at most 2^(1-T); with 4*2^-T <= eps that is at most eps/2.
      long long T = 1;
      while (pow2(2 - T) > eps) {
        ++T;
        if (2 * T + 1 > 24) {
          throw std::invalid_argument("epsilon_net: eps too small for the shift net");
        }
      }
      for (const auto& w : words_up_to_period(2 * T + 1)) net.push_back(shift_point(w));
      return net;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Cylinders on the window [-T, T] whose every point lies strictly inside the
// ball; DFS over the window with the partial distance as the pruning bound.
void shift_ball_rec(const PeriodicWord& c, long long T, const Rat& radius, long long i,
                    std::string& pattern, Rat partial, std::vector<BasicOpen>& out) {
  Rat tail = pow2(1 - T);
  if (partial + tail >= radius) return;  // every completion already too far
  if (i > T) {
    out.push_back(cylinder_open(-T, pattern));
    return;
  }
  long long depth = i < 0 ? -i : i;
  for (char bit : {'0', '1'}) {
    pattern[static_cast<size_t>(i + T)] = bit;
    Rat mis = bit != c.at(i) ? pow2(-depth) : Rat(0);
    // Mirror index -i is filled in the same step to keep the bound tight.
    if (i > 0) {
      for (char mbit : {'0', '1'}) {
        pattern[static_cast<size_t>(T - i)] = mbit;
        Rat mmis = mbit != c.at(-i) ? pow2(-depth) : Rat(0);
        shift_ball_rec(c, T, radius, i + 1, pattern, partial + mis + mmis, out);
      }
    } else {
      shift_ball_rec(c, T, radius, i + 1, pattern, partial + mis, out);
    }
  }
}

}  // namespace

OpenSet ball_open(const Point& center, const Rat& radius) {
  if (radius <= 0) throw std::invalid_argument("ball_open: radius must be positive");
  switch (center.space.kind) {
    case SpaceKind::Interval: {
      if (center.space.arity != 1) break;
      const Rat& c = center.interval();
      Rat lo = c - radius, hi = c + radius;
      bool clamp_lo = lo < 0, clamp_hi = hi > 1;
      return open_set(interval_open(clamp_lo ? Rat(0) : lo, clamp_hi ? Rat(1) : hi,
                                    clamp_lo, clamp_hi));
    }
    case SpaceKind::Circle: {
      if (center.space.arity != 1) break;
      if (radius > Rat(1, 2)) return whole_space(center.space);
      const CircleCoord& c = center.circle();
      if (radius == Rat(1, 2)) {
        // Everything except the antipode; three small arcs cover it exactly.
        return open_set({arc_open(mod1(c.p - Rat(1, 4)), c.q, Rat(1, 4)),
                         arc_open(c.p, c.q, Rat(1, 4)),
                         arc_open(mod1(c.p + Rat(1, 4)), c.q, Rat(1, 4))});
      }
      return open_set(arc_open(c, radius));
    }
    case SpaceKind::Shift: {
      if (center.space.arity != 1) break;
      if (radius > 3) return whole_space(center.space);
      // Window size: tail 2^(1-T) at most half the radius, so points within
      // radius/2 of the center are guaranteed covered.
      long long T = 1;
      while (pow2(1 - T) * 2 > radius) {
        ++T;
        if (T > 6) throw std::invalid_argument("ball_open: radius too small for the shift ball");
      }
      std::string pattern(static_cast<size_t>(2 * T + 1), '0');
      std::vector<BasicOpen> pieces;
      Rat zero(0);
      shift_ball_rec(center.word(), T, radius, 0, pattern, zero, pieces);
      if (pieces.empty()) {
        // The center itself is within any positive radius, so the DFS only
        // comes back empty when the radius is below the window resolution.
        throw std::invalid_argument("ball_open: radius too small for the shift ball");
      }
      return open_set(std::move(pieces));
    }
  }
  throw std::invalid_argument("ball_open: base spaces only");
}

std::vector<BasicOpen> interval_basis(const Rat& mesh) {
  if (mesh <= 0 || mesh > 1 || rat_num(mesh) != 1) {
    throw std::invalid_argument("interval_basis: mesh must be 1/m");
  }
  long long m = rat_den(mesh).convert_to<long long>();
  std::vector<BasicOpen> basis;
  for (long long j = 0; j < m; ++j) {
    basis.push_back(interval_open(Rat(j, m), Rat(j + 1, m), j == 0, j == m - 1));
  }
  return basis;
}

std::vector<BasicOpen> shift_basis(long long half_range) {
  if (half_range < 0 || half_range > 5) {
    throw std::invalid_argument("shift_basis: half_range out of range");
  }
  long long n = 2 * half_range + 1;
  std::vector<BasicOpen> basis;
  for (Int m = 0; m < (Int(1) << static_cast<unsigned>(n)); ++m) {
    std::string w(static_cast<size_t>(n), '0');
    for (long long i = 0; i < n; ++i) {
      if (bit_test(m, static_cast<unsigned>(n - 1 - i))) w[static_cast<size_t>(i)] = '1';
    }
    basis.push_back(cylinder_open(-half_range, w));
  }
  return basis;
}

std::vector<BasicOpen> circle_basis(const Rat& radius) {
  if (radius <= 0 || radius >= Rat(1, 2) || rat_num(radius) != 1) {
    throw std::invalid_argument("circle_basis: radius must be 1/m with m >= 3");
  }
  long long m = rat_den(radius).convert_to<long long>();
  std::vector<BasicOpen> basis;
  for (long long j = 0; j < m; ++j) basis.push_back(arc_open(Rat(j, m), 0, radius));
  return basis;
}

std::vector<BasicOpen> default_basis(const SpaceId& space) {
  if (space.arity != 1) throw std::invalid_argument("default_basis: base spaces only");
  switch (space.kind) {
    case SpaceKind::Interval: return interval_basis(Rat(1, 16));
    case SpaceKind::Shift: return shift_basis(2);
    case SpaceKind::Circle: return circle_basis(Rat(1, 16));
  }
  throw std::logic_error("unreachable");
}

std::string open_str(const BasicOpen& u) {
  std::ostringstream os;
  if (const auto* iv = std::get_if<IntervalOpen>(&u.rep)) {
    os << (iv->closed_lo ? '[' : '(') << rat_str(iv->lo) << ", " << rat_str(iv->hi)
       << (iv->closed_hi ? ']' : ')');
  } else if (const auto* c = std::get_if<Cylinder>(&u.rep)) {
    os << "Cyl(" << c->anchor << ", " << c->word << ")";
  } else {
    const Arc& a = std::get<Arc>(u.rep);
    os << "Arc(" << qv_str(a.center.angle()) << ", r=" << rat_str(a.radius) << ")";
  }
  return os.str();
}

std::string open_str(const OpenSet& u) {
  if (u.pieces.empty()) return "{}";
  std::ostringstream os;
  for (size_t i = 0; i < u.pieces.size(); ++i) {
    if (i) os << " u ";
    os << open_str(u.pieces[i]);
  }
  return os.str();
}

}  // namespace nads
