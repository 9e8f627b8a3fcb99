#include "nads/exact_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace nads {

namespace {

bool collinear(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b,
               const std::pair<Rat, Rat>& c) {
  return (c.second - a.second) * (b.first - a.first) ==
         (b.second - a.second) * (c.first - a.first);
}

}  // namespace

PLMap make_pl(std::vector<std::pair<Rat, Rat>> pts) {
  if (pts.size() < 2) throw std::invalid_argument("PL map needs at least two breakpoints");
  if (pts.front().first != 0 || pts.back().first != 1) {
    throw std::invalid_argument("PL breakpoints must start at x=0 and end at x=1");
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].second < 0 || pts[i].second > 1) {
      throw std::invalid_argument("PL value outside [0,1]");
    }
    if (i > 0 && !(pts[i - 1].first < pts[i].first)) {
      throw std::invalid_argument("PL breakpoints must be strictly increasing in x");
    }
  }
  // Drop interior breakpoints that do not change the slope.
  std::vector<std::pair<Rat, Rat>> out;
  out.push_back(pts.front());
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), pts[i])) out.pop_back();
    out.push_back(pts[i]);
  }
  while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), pts.back())) out.pop_back();
  out.push_back(pts.back());
  return PLMap{std::move(out)};
}

Rat pl_eval(const PLMap& f, const Rat& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("PL eval outside [0,1]");
  const auto& p = f.pts;
  // Binary search for the segment containing x.
  size_t lo = 0, hi = p.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (p[mid].first <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (p[lo].first == x) return p[lo].second;
  if (p[hi].first == x) return p[hi].second;
  const Rat& x0 = p[lo].first;
  const Rat& y0 = p[lo].second;
  return y0 + (p[hi].second - y0) * (x - x0) / (p[hi].first - x0);
}

PLMap pl_compose(const PLMap& g, const PLMap& f) {
  // Grid: breakpoints of f plus every x where f crosses a breakpoint of g.
  std::vector<Rat> grid;
  for (const auto& bp : f.pts) grid.push_back(bp.first);
  for (size_t i = 0; i + 1 < f.pts.size(); ++i) {
    const Rat& x0 = f.pts[i].first;
    const Rat& y0 = f.pts[i].second;
    const Rat& x1 = f.pts[i + 1].first;
    const Rat& y1 = f.pts[i + 1].second;
    if (y0 == y1) continue;  // constant piece, lands inside one g-segment
    Rat lo = std::min(y0, y1), hi = std::max(y0, y1);
    for (const auto& gb : g.pts) {
      if (gb.first > lo && gb.first < hi) {
        grid.push_back(x0 + (gb.first - y0) * (x1 - x0) / (y1 - y0));
      }
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(grid.size());
  for (const auto& x : grid) pts.emplace_back(x, pl_eval(g, pl_eval(f, x)));
  return make_pl(std::move(pts));
}

bool pl_is_identity(const PLMap& f) {
  for (const auto& bp : f.pts) {
    if (bp.first != bp.second) return false;
  }
  return true;
}

int pl_orientation(const PLMap& f) {
  bool inc = true, dec = true;
  for (size_t i = 0; i + 1 < f.pts.size(); ++i) {
    if (!(f.pts[i].second < f.pts[i + 1].second)) inc = false;
    if (!(f.pts[i].second > f.pts[i + 1].second)) dec = false;
  }
  return inc ? 1 : (dec ? -1 : 0);
}

bool pl_is_homeo(const PLMap& f) {
  int o = pl_orientation(f);
  if (o == 0) return false;
  const Rat& first = f.pts.front().second;
  const Rat& last = f.pts.back().second;
  return o > 0 ? (first == 0 && last == 1) : (first == 1 && last == 0);
}

PLMap pl_inverse(const PLMap& f) {
  if (!pl_is_homeo(f)) throw std::invalid_argument("PL inverse of a non-homeomorphism");
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(f.pts.size());
  for (const auto& bp : f.pts) pts.emplace_back(bp.second, bp.first);
  if (pl_orientation(f) < 0) std::reverse(pts.begin(), pts.end());
  return make_pl(std::move(pts));
}

ExactMap identity_map(const SpaceId& space) { return ExactMap{space, IdentityMap{}}; }

ExactMap interval_map(PLMap f) { return ExactMap{{SpaceKind::Interval, 1}, std::move(f)}; }

ExactMap interval_map(std::vector<std::pair<Rat, Rat>> pts) {
  return interval_map(make_pl(std::move(pts)));
}

ExactMap shift_map(long long k) { return ExactMap{{SpaceKind::Shift, 1}, ShiftPower{k}}; }

ExactMap circle_map(const Rat& p, long long q) {
  return ExactMap{{SpaceKind::Circle, 1}, RotationOffset{mod1(p), q}};
}

ExactMap product_map(std::vector<ExactMap> parts) {
  if (parts.empty()) throw std::invalid_argument("product map needs at least one part");
  SpaceId base = parts.front().space;
  if (base.arity != 1) throw std::invalid_argument("product parts must act on base spaces");
  for (const auto& m : parts) {
    if (!(m.space == base)) throw std::invalid_argument("product parts act on different spaces");
  }
  SpaceId sp{base.kind, static_cast<int>(parts.size())};
  return ExactMap{sp, ProductMap{std::make_shared<const std::vector<ExactMap>>(std::move(parts))}};
}

Point apply(const ExactMap& f, const Point& x) {
  if (!(f.space == x.space)) throw std::invalid_argument("map applied to point of wrong space");
  if (std::holds_alternative<IdentityMap>(f.rep)) return x;
  if (const auto* pm = std::get_if<ProductMap>(&f.rep)) {
    const auto& maps = *pm->parts;
    const auto& pts = x.parts();
    std::vector<Point> out;
    out.reserve(maps.size());
    for (size_t i = 0; i < maps.size(); ++i) out.push_back(apply(maps[i], pts[i]));
    return product_point(std::move(out));
  }
  switch (f.space.kind) {
    case SpaceKind::Interval: return interval_point(pl_eval(std::get<PLMap>(f.rep), x.interval()));
    case SpaceKind::Shift: return shift_point(x.word().shifted(std::get<ShiftPower>(f.rep).k));
    case SpaceKind::Circle: {
      const auto& r = std::get<RotationOffset>(f.rep);
      const auto& c = x.circle();
      return circle_point(c.p + r.p, c.q + r.q);
    }
  }
  throw std::logic_error("unreachable space kind");
}

ExactMap compose(const ExactMap& g, const ExactMap& f) {
  if (!(g.space == f.space)) throw std::invalid_argument("composing maps of different spaces");
  if (std::holds_alternative<IdentityMap>(g.rep)) return f;
  if (std::holds_alternative<IdentityMap>(f.rep)) return g;
  if (const auto* gp = std::get_if<ProductMap>(&g.rep)) {
    const auto& fp = std::get<ProductMap>(f.rep);
    std::vector<ExactMap> parts;
    parts.reserve(gp->parts->size());
    for (size_t i = 0; i < gp->parts->size(); ++i) {
      parts.push_back(compose((*gp->parts)[i], (*fp.parts)[i]));
    }
    return product_map(std::move(parts));
  }
  switch (g.space.kind) {
    case SpaceKind::Interval:
      return interval_map(pl_compose(std::get<PLMap>(g.rep), std::get<PLMap>(f.rep)));
    case SpaceKind::Shift:
      return shift_map(std::get<ShiftPower>(g.rep).k + std::get<ShiftPower>(f.rep).k);
    case SpaceKind::Circle: {
      const auto& a = std::get<RotationOffset>(g.rep);
      const auto& b = std::get<RotationOffset>(f.rep);
      return circle_map(a.p + b.p, a.q + b.q);
    }
  }
  throw std::logic_error("unreachable space kind");
}

bool is_identity(const ExactMap& f) {
  if (std::holds_alternative<IdentityMap>(f.rep)) return true;
  if (const auto* pm = std::get_if<ProductMap>(&f.rep)) {
    for (const auto& m : *pm->parts) {
      if (!is_identity(m)) return false;
    }
    return true;
  }
  if (const auto* pl = std::get_if<PLMap>(&f.rep)) return pl_is_identity(*pl);
  if (const auto* sp = std::get_if<ShiftPower>(&f.rep)) return sp->k == 0;
  const auto& r = std::get<RotationOffset>(f.rep);
  return r.p == 0 && r.q == 0;
}

bool maps_equal(const ExactMap& f, const ExactMap& g) {
  if (!(f.space == g.space)) return false;
  if (is_identity(f) || is_identity(g)) return is_identity(f) && is_identity(g);
  if (f.rep.index() != g.rep.index()) return false;
  if (const auto* pf = std::get_if<PLMap>(&f.rep)) {
    return pf->pts == std::get<PLMap>(g.rep).pts;
  }
  if (const auto* sf = std::get_if<ShiftPower>(&f.rep)) {
    return sf->k == std::get<ShiftPower>(g.rep).k;
  }
  if (const auto* rf = std::get_if<RotationOffset>(&f.rep)) {
    const auto& rg = std::get<RotationOffset>(g.rep);
    return rf->p == rg.p && rf->q == rg.q;
  }
  const auto& pf = *std::get<ProductMap>(f.rep).parts;
  const auto& pg = *std::get<ProductMap>(g.rep).parts;
  for (size_t i = 0; i < pf.size(); ++i) {
    if (!maps_equal(pf[i], pg[i])) return false;
  }
  return true;
}

bool is_invertible(const ExactMap& f) {
  if (std::holds_alternative<IdentityMap>(f.rep)) return true;
  if (const auto* pm = std::get_if<ProductMap>(&f.rep)) {
    for (const auto& m : *pm->parts) {
      if (!is_invertible(m)) return false;
    }
    return true;
  }
  if (const auto* pl = std::get_if<PLMap>(&f.rep)) return pl_is_homeo(*pl);
  return true;  // shift powers and rotations are always invertible
}

ExactMap inverse(const ExactMap& f) {
  if (std::holds_alternative<IdentityMap>(f.rep)) return f;
  if (const auto* pm = std::get_if<ProductMap>(&f.rep)) {
    std::vector<ExactMap> parts;
    parts.reserve(pm->parts->size());
    for (const auto& m : *pm->parts) parts.push_back(inverse(m));
    return product_map(std::move(parts));
  }
  switch (f.space.kind) {
    case SpaceKind::Interval: return interval_map(pl_inverse(std::get<PLMap>(f.rep)));
    case SpaceKind::Shift: return shift_map(-std::get<ShiftPower>(f.rep).k);
    case SpaceKind::Circle: {
      const auto& r = std::get<RotationOffset>(f.rep);
      return circle_map(-r.p, -r.q);
    }
  }
  throw std::logic_error("unreachable space kind");
}

namespace {

FixedSet pl_fixed_points(const PLMap& f) {
  FixedSet out;
  std::vector<std::pair<Rat, Rat>> segs;
  std::vector<Rat> pts;
  for (size_t i = 0; i + 1 < f.pts.size(); ++i) {
    const Rat& x0 = f.pts[i].first;
    const Rat& y0 = f.pts[i].second;
    const Rat& x1 = f.pts[i + 1].first;
    const Rat& y1 = f.pts[i + 1].second;
    // Solve f(x) = x on [x0, x1]: g(x) = y0 + s (x - x0) - x with s the slope.
    Rat s = (y1 - y0) / (x1 - x0);
    if (s == 1) {
      if (y0 == x0) segs.emplace_back(x0, x1);  // whole piece on the diagonal
      continue;
    }
    Rat root = (x0 * s - y0) / (s - 1);
    if (root >= x0 && root <= x1) pts.push_back(root);
  }
  // Merge touching diagonal segments and drop points they already cover.
  std::vector<std::pair<Rat, Rat>> merged;
  for (auto& sg : segs) {
    if (!merged.empty() && merged.back().second == sg.first) {
      merged.back().second = sg.second;
    } else {
      merged.push_back(sg);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& x : pts) {
    bool covered = false;
    for (const auto& sg : merged) covered = covered || (x >= sg.first && x <= sg.second);
    if (!covered) out.points.push_back(interval_point(x));
  }
  out.segments = std::move(merged);
  return out;
}

FixedSet shift_fixed_points(long long k) {
  FixedSet out;
  if (k == 0) {
    out.all = true;
    return out;
  }
  long long p = k > 0 ? k : -k;
  if (p > 20) throw std::invalid_argument("fixed point enumeration too large for sigma^k");
  // sigma^k x = x exactly when the sequence is p-periodic, i.e. the minimal
  // period divides p.
  for (const auto& w : words_up_to_period(p)) {
    if (p % w.period() == 0) out.points.push_back(shift_point(w));
  }
  return out;
}

}  // namespace

FixedSet fixed_points(const ExactMap& f) {
  if (is_identity(f)) {
    FixedSet out;
    out.all = true;
    return out;
  }
  if (std::holds_alternative<ProductMap>(f.rep)) {
    throw std::invalid_argument("fixed point sets of non-identity product maps are not supported");
  }
  switch (f.space.kind) {
    case SpaceKind::Interval: return pl_fixed_points(std::get<PLMap>(f.rep));
    case SpaceKind::Shift: return shift_fixed_points(std::get<ShiftPower>(f.rep).k);
    case SpaceKind::Circle: return FixedSet{};  // nontrivial rotations have no fixed points
  }
  throw std::logic_error("unreachable space kind");
}

std::string map_str(const ExactMap& f) {
  if (std::holds_alternative<IdentityMap>(f.rep)) return "id[" + space_str(f.space) + "]";
  if (const auto* pm = std::get_if<ProductMap>(&f.rep)) {
    std::string out = "(";
    for (size_t i = 0; i < pm->parts->size(); ++i) {
      if (i) out += " x ";
      out += map_str((*pm->parts)[i]);
    }
    return out + ")";
  }
  if (const auto* pl = std::get_if<PLMap>(&f.rep)) {
    std::string out = "pl[";
    for (size_t i = 0; i < pl->pts.size(); ++i) {
      if (i) out += " ";
      out += "(" + rat_str(pl->pts[i].first) + "," + rat_str(pl->pts[i].second) + ")";
    }
    return out + "]";
  }
  if (const auto* sp = std::get_if<ShiftPower>(&f.rep)) {
    return "sigma^" + std::to_string(sp->k);
  }
  const auto& r = std::get<RotationOffset>(f.rep);
  return "rot[" + rat_str(r.p) + (r.q >= 0 ? " + " : " - ") +
         std::to_string(r.q >= 0 ? r.q : -r.q) + "*alpha]";
}

}  // namespace nads
