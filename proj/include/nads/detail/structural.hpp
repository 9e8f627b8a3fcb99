#pragma once

// Structural facts about a system's composite family, shared by the checkers
// and by witness replay. Everything here is an upper bound or an exact
// certificate; nothing returns an approximation without saying so.

#include "nads/opens.hpp"
#include "nads/system.hpp"

#include <algorithm>
#include <optional>

namespace nads::detail {

constexpr long long kOrderBound = 64;
constexpr size_t kCompositeCap = 4096;
constexpr long long kTailBound = 100000;

inline long long imod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Upper bound on the Lipschitz constant of a map. For shift powers the
// weighted metric stretches by at most 2 per coordinate of shift.
inline Rat lip_upper(const ExactMap& f) {
  if (std::holds_alternative<IdentityMap>(f.rep)) return Rat(1);
  if (const auto* pl = std::get_if<PLMap>(&f.rep)) {
    Rat best(0);
    for (size_t i = 0; i + 1 < pl->pts.size(); ++i) {
      Rat slope = (pl->pts[i + 1].second - pl->pts[i].second) /
                  (pl->pts[i + 1].first - pl->pts[i].first);
      best = std::max(best, Rat(abs(slope)));
    }
    return best;
  }
  if (const auto* sp = std::get_if<ShiftPower>(&f.rep)) {
    long long k = sp->k < 0 ? -sp->k : sp->k;
    return Rat(Int(1) << static_cast<unsigned>(k));
  }
  if (std::holds_alternative<RotationOffset>(f.rep)) return Rat(1);
  const auto& pm = std::get<ProductMap>(f.rep);
  Rat best(0);
  for (const ExactMap& part : *pm.parts) best = std::max(best, lip_upper(part));
  return best;
}

// Breakpoint count, used to abandon composite tracking when a
// non-invertible interval map makes the segments multiply.
inline size_t map_size(const ExactMap& f) {
  if (const auto* pl = std::get_if<PLMap>(&f.rep)) return pl->pts.size();
  if (const auto* pm = std::get_if<ProductMap>(&f.rep)) {
    size_t total = 0;
    for (const ExactMap& part : *pm->parts) total += map_size(part);
    return total;
  }
  return 1;
}

// Smallest t <= bound with g^t the identity.
inline std::optional<long long> map_order(const ExactMap& g, long long bound) {
  ExactMap p = g;
  for (long long t = 1; t <= bound; ++t) {
    if (is_identity(p)) return t;
    if (map_size(p) > kCompositeCap) return std::nullopt;
    p = compose(g, p);
  }
  return std::nullopt;
}

// For a periodic system whose period composition g has finite order t, every
// composite f_1^n equals c[(n-1) mod m*t] where c is this list. Empty when
// the system is not periodic or the order is out of reach.
inline std::optional<std::vector<ExactMap>> finite_composites(const NASystem& sys) {
  if (!sys.period) return std::nullopt;
  long long m = *sys.period;
  auto t = map_order(segment_raw(sys, 1, m), kOrderBound);
  if (!t) return std::nullopt;
  std::vector<ExactMap> out;
  out.reserve(static_cast<size_t>(m * *t));
  ExactMap acc = identity_map(sys.space);
  for (long long n = 1; n <= m * *t; ++n) {
    acc = compose(sys.rule(n), acc);
    if (map_size(acc) > kCompositeCap) return std::nullopt;
    out.push_back(acc);
  }
  return out;
}

// max_n Lip(f_1^n) over n <= upto, bounded by the running product of the
// step constants.
inline Rat prefix_lip_bound(const NASystem& sys, long long upto) {
  Rat best(1), run(1);
  for (long long n = 1; n <= upto; ++n) {
    run *= lip_upper(sys.rule(n));
    best = std::max(best, run);
  }
  return best;
}

inline Rat max_lip(const std::vector<ExactMap>& maps) {
  Rat best(1);
  for (const ExactMap& f : maps) best = std::max(best, lip_upper(f));
  return best;
}

// Exact identity times of the prefix composites f_1^n for n <= H. If a
// non-invertible interval map blows the breakpoint count up, the tracker
// stops composing and conservatively reports later times as non-identity;
// that only weakens refutations, never falsifies them.
inline std::vector<char> identity_times(const NASystem& sys, long long H) {
  std::vector<char> ident(static_cast<size_t>(H) + 1, 0);
  ExactMap acc = identity_map(sys.space);
  bool alive = true;
  for (long long n = 1; n <= H; ++n) {
    if (!alive) continue;
    acc = compose(step_map(sys, n), acc);
    if (map_size(acc) > kCompositeCap) {
      alive = false;
      continue;
    }
    ident[static_cast<size_t>(n)] = is_identity(acc) ? 1 : 0;
  }
  return ident;
}

// Isometry spot check: invertible with unit Lipschitz bound both ways.
inline bool map_is_isometry_upper(const ExactMap& f) {
  if (!is_invertible(f)) return false;
  return lip_upper(f) == 1 && lip_upper(inverse(f)) == 1;
}

// Strict upper bound on pairwise distances inside a piece, when the supremum
// is provably unattained: open intervals and open arcs qualify, cylinders do
// not (two sequences can realize the sup over the free coordinates).
inline std::optional<Rat> strict_diam_upper(const BasicOpen& u) {
  if (const auto* iv = std::get_if<IntervalOpen>(&u.rep)) {
    if (iv->closed_lo && iv->closed_hi) return std::nullopt;
    return Rat(iv->hi - iv->lo);
  }
  if (const auto* arc = std::get_if<Arc>(&u.rep)) return Rat(2 * arc->radius);
  return std::nullopt;
}

// Lower bound G >= 0 with d(x, y) >= G for every x in v, y in w, or nullopt
// when the pieces can come arbitrarily close. Intervals use the linear gap,
// arcs the center distance minus both radii.
inline std::optional<QuadVal> separation_lower(const BasicOpen& v, const BasicOpen& w) {
  if (const auto* a = std::get_if<IntervalOpen>(&v.rep)) {
    const auto* b = std::get_if<IntervalOpen>(&w.rep);
    if (!b) return std::nullopt;
    Rat gap = std::max(Rat(b->lo - a->hi), Rat(a->lo - b->hi));
    if (gap <= 0) return std::nullopt;
    return QuadVal(gap);
  }
  if (const auto* a = std::get_if<Arc>(&v.rep)) {
    const auto* b = std::get_if<Arc>(&w.rep);
    if (!b) return std::nullopt;
    QuadVal gap = distance(circle_point(a->center.p, a->center.q),
                           circle_point(b->center.p, b->center.q)) -
                  QuadVal(a->radius + b->radius);
    if (qv_sign(gap) <= 0) return std::nullopt;
    return gap;
  }
  return std::nullopt;
}

}  // namespace nads::detail
