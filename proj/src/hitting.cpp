#include "nads/hitting.hpp"

#include <algorithm>

namespace nads {

namespace {

long long imod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

void check_horizon(long long H, const char* who) {
  if (H < 1) throw std::invalid_argument(std::string(who) + ": horizon must be >= 1");
  if (H > run_config().horizon_cap)
    throw std::invalid_argument(std::string(who) + ": horizon exceeds the configured cap");
}

}  // namespace

bool HittingSet::contains(long long n) const {
  return std::binary_search(members.begin(), members.end(), n);
}

long long HittingSet::max_gap() const {
  long long best = 0;
  long long prev = 0;  // virtual member just before the window
  for (long long m : members) {
    best = std::max(best, m - prev - 1);
    prev = m;
  }
  return std::max(best, horizon - prev);
}

long long HittingSet::max_run() const {
  long long best = 0, run = 0, prev = 0;
  for (long long m : members) {
    run = (m == prev + 1) ? run + 1 : 1;
    best = std::max(best, run);
    prev = m;
  }
  return best;
}

std::vector<Rat> HittingSet::density_profile() const {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(horizon));
  size_t idx = 0;
  for (long long n = 1; n <= horizon; ++n) {
    while (idx < members.size() && members[idx] <= n) ++idx;
    out.emplace_back(Int(idx), Int(n));
  }
  return out;
}

HittingSet make_hitting_set(long long horizon, std::vector<long long> members, HitKind kind) {
  if (horizon < 0) throw std::invalid_argument("make_hitting_set: horizon must be >= 0");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && (members.front() < 1 || members.back() > horizon))
    throw std::invalid_argument("make_hitting_set: members must lie in [1, horizon]");
  return HittingSet{horizon, std::move(members), kind};
}

HittingSet transitivity_times(const NASystem& sys, const OpenSet& u, const OpenSet& v,
                              long long H) {
  if (u.space != sys.space || v.space != sys.space)
    throw std::invalid_argument("transitivity_times: space mismatch");
  check_horizon(H, "transitivity_times");
  std::vector<long long> members;
  OpenSet img = u;
  for (long long n = 1; n <= H; ++n) {
    img = image_open(step_map(sys, n), img);
    if (require_intersects(img, v, "transitivity_times at n=" + std::to_string(n)))
      members.push_back(n);
  }
  return make_hitting_set(H, std::move(members), HitKind::Transitivity);
}

namespace {

// Fast path for shift systems: every step is a shift power, so the orbit of a
// word is a rotation of the word and pairwise distances at time n are the
// precomputed distance profile evaluated at the cumulative exponent.
bool all_steps_shift_powers(const NASystem& sys, long long H) {
  if (sys.space.kind != SpaceKind::Shift || sys.space.arity != 1) return false;
  long long upto = sys.period ? std::min(H, *sys.period) : H;
  for (long long n = 1; n <= upto; ++n) {
    const ExactMap f = step_map(sys, n);
    if (!std::holds_alternative<ShiftPower>(f.rep) && !std::holds_alternative<IdentityMap>(f.rep))
      return false;
  }
  return true;
}

bool pair_separated(const Point& x, const Point& y, const Rat& delta) {
  return qv_sign(distance(x, y) - QuadVal{delta, 0}) > 0;
}

}  // namespace

HittingSet sensitivity_times(const NASystem& sys, const OpenSet& u, const Rat& delta,
                             long long H, const Rat& net_eps) {
  if (u.space != sys.space)
    throw std::invalid_argument("sensitivity_times: space mismatch");
  if (delta <= 0) throw std::invalid_argument("sensitivity_times: delta must be positive");
  check_horizon(H, "sensitivity_times");

  std::vector<Point> pts;
  for (const Point& x : epsilon_net(sys.space, net_eps))
    if (require_member(x, u, "sensitivity_times net candidate")) pts.push_back(x);
  std::vector<long long> members;
  const size_t m = pts.size();
  if (m < 2) return make_hitting_set(H, std::move(members), HitKind::Sensitivity);

  if (sys.all_isometries) {
    // Distances never change, so the hitting set is all of [1, H] or empty.
    bool hit = false;
    for (size_t i = 0; i < m && !hit; ++i)
      for (size_t j = i + 1; j < m && !hit; ++j)
        hit = pair_separated(pts[i], pts[j], delta);
    if (hit)
      for (long long n = 1; n <= H; ++n) members.push_back(n);
    return make_hitting_set(H, std::move(members), HitKind::Sensitivity);
  }

  if (all_steps_shift_powers(sys, H)) {
    // sep[(i,j)][r] records whether d(sigma^r x_i, sigma^r x_j) > delta.
    std::vector<std::vector<char>> sep(m * m);
    auto separated_at = [&](size_t i, size_t j, long long s) {
      auto& row = sep[i * m + j];
      if (row.empty()) {
        auto profile = shift_distance_profile(pts[i].word(), pts[j].word());
        row.reserve(profile.size());
        for (const Rat& d : profile) row.push_back(d > delta ? 1 : 0);
      }
      return row[static_cast<size_t>(imod(s, static_cast<long long>(row.size())))] != 0;
    };
    long long s = 0;
    for (long long n = 1; n <= H; ++n) {
      const ExactMap f = step_map(sys, n);
      if (const auto* sp = std::get_if<ShiftPower>(&f.rep)) s += sp->k;
      bool hit = false;
      for (size_t i = 0; i < m && !hit; ++i)
        for (size_t j = i + 1; j < m && !hit; ++j) hit = separated_at(i, j, s);
      if (hit) members.push_back(n);
    }
    return make_hitting_set(H, std::move(members), HitKind::Sensitivity);
  }

  std::vector<Point> cur = pts;
  for (long long n = 1; n <= H; ++n) {
    const ExactMap f = step_map(sys, n);
    for (Point& x : cur) x = apply(f, x);
    bool hit = false;
    for (size_t i = 0; i < m && !hit; ++i)
      for (size_t j = i + 1; j < m && !hit; ++j) hit = pair_separated(cur[i], cur[j], delta);
    if (hit) members.push_back(n);
  }
  return make_hitting_set(H, std::move(members), HitKind::Sensitivity);
}

ClassVerdict classify_cofinite(const HittingSet& hs, long long N) {
  if (N < 1 || N > hs.horizon)
    throw std::invalid_argument("classify_cofinite: N must lie in [1, horizon]");
  std::optional<long long> first_missing;
  for (long long n = N; n <= hs.horizon; ++n)
    if (!hs.contains(n)) {
      first_missing = n;
      break;
    }
  nlohmann::json details{{"N", N}, {"horizon", hs.horizon}};
  details["first_missing"] = first_missing ? nlohmann::json(*first_missing) : nlohmann::json();
  return ClassVerdict{"cofinite", !first_missing, std::move(details)};
}

ClassVerdict classify_syndetic(const HittingSet& hs, long long a) {
  if (a < 0) throw std::invalid_argument("classify_syndetic: a must be >= 0");
  // A window {i, ..., i+a} inside [1, horizon] misses the members exactly
  // when some maximal block of non-members has length > a; the window then
  // starts at the block.
  std::optional<long long> window_start;
  long long prev = 0;
  auto scan_block = [&](long long lo, long long hi) {
    if (!window_start && hi - lo + 1 > a) window_start = lo;
  };
  for (long long mem : hs.members) {
    if (mem > prev + 1) scan_block(prev + 1, mem - 1);
    prev = mem;
  }
  if (prev < hs.horizon) scan_block(prev + 1, hs.horizon);
  nlohmann::json details{{"a", a}, {"horizon", hs.horizon}, {"max_gap", hs.max_gap()}};
  details["window_start"] = window_start ? nlohmann::json(*window_start) : nlohmann::json();
  return ClassVerdict{"syndetic", !window_start, std::move(details)};
}

ClassVerdict classify_thick(const HittingSet& hs, long long p) {
  if (p < 1) throw std::invalid_argument("classify_thick: p must be >= 1");
  std::optional<long long> run_start;
  long long run = 0, prev = 0;
  for (long long mem : hs.members) {
    run = (mem == prev + 1) ? run + 1 : 1;
    prev = mem;
    if (run >= p && !run_start) run_start = mem - p + 1;
  }
  nlohmann::json details{{"p", p}, {"horizon", hs.horizon}, {"max_run", hs.max_run()}};
  details["run_start"] = run_start ? nlohmann::json(*run_start) : nlohmann::json();
  return ClassVerdict{"thick", run_start.has_value(), std::move(details)};
}

ClassVerdict classify_upper_density(const HittingSet& hs, const Rat& rho) {
  if (hs.horizon < 1)
    throw std::invalid_argument("classify_upper_density: horizon must be >= 1");
  Rat density(Int(static_cast<long long>(hs.members.size())), Int(hs.horizon));
  nlohmann::json profile = nlohmann::json::array();
  for (const Rat& d : hs.density_profile()) profile.push_back(rat_str(d));
  nlohmann::json details{{"rho", rat_str(rho)},
                         {"horizon", hs.horizon},
                         {"count", static_cast<long long>(hs.members.size())},
                         {"density", rat_str(density)},
                         {"profile", std::move(profile)}};
  return ClassVerdict{"upper-density", density >= rho, std::move(details)};
}

}  // namespace nads
