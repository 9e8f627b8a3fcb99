#include "nads/measures.hpp"

#include <algorithm>

namespace nads {

namespace {

// Subset enumeration in prohorov() is exponential in the atom count; this cap
// keeps a single call comfortably under a second.
constexpr size_t kProhorovAtomCap = 12;

void check_same_space(const SpaceId& a, const SpaceId& b, const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": space mismatch");
}

}  // namespace

AtomicMeasure atomic_measure(std::vector<std::pair<Point, Rat>> atoms) {
  if (atoms.empty()) throw std::invalid_argument("atomic_measure: no atoms");
  SpaceId space = atoms.front().first.space;
  for (const auto& [pt, w] : atoms) {
    check_same_space(space, pt.space, "atomic_measure");
    if (w <= 0) throw std::invalid_argument("atomic_measure: weights must be positive");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  std::vector<std::pair<Point, Rat>> merged;
  Rat total(0);
  for (auto& [pt, w] : atoms) {
    total += w;
    if (!merged.empty() && point_eq(merged.back().first, pt))
      merged.back().second += w;
    else
      merged.emplace_back(std::move(pt), w);
  }
  if (total != 1) throw std::invalid_argument("atomic_measure: weights must sum to 1");
  return AtomicMeasure{space, std::move(merged)};
}

AtomicMeasure dirac(const Point& x) { return atomic_measure({{x, Rat(1)}}); }

AtomicMeasure empirical(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("empirical: no points");
  Rat w(Int(1), Int(points.size()));
  std::vector<std::pair<Point, Rat>> atoms;
  atoms.reserve(points.size());
  for (const Point& p : points) atoms.emplace_back(p, w);
  return atomic_measure(std::move(atoms));
}

AtomicMeasure pushforward_map(const ExactMap& f, const AtomicMeasure& mu) {
  check_same_space(f.space, mu.space, "pushforward_map");
  std::vector<std::pair<Point, Rat>> atoms;
  atoms.reserve(mu.atoms.size());
  for (const auto& [pt, w] : mu.atoms) atoms.emplace_back(apply(f, pt), w);
  return atomic_measure(std::move(atoms));
}

AtomicMeasure pushforward(const NASystem& sys, const AtomicMeasure& mu, long long n) {
  check_same_space(sys.space, mu.space, "pushforward");
  if (n < 0) throw std::invalid_argument("pushforward: n must be >= 0");
  AtomicMeasure out = mu;
  for (long long i = 1; i <= n; ++i) out = pushforward_map(step_map(sys, i), out);
  return out;
}

Rat measure_of(const AtomicMeasure& mu, const OpenSet& u, const std::string& context) {
  check_same_space(mu.space, u.space, "measure_of");
  Rat total(0);
  for (const auto& [pt, w] : mu.atoms)
    if (require_member(pt, u, context)) total += w;
  return total;
}

namespace {

// One direction of the Prohorov condition: mu(A) <= nu(N(A, eps)) + eps for
// every subset A of supp(mu), with N the strict open enlargement. cover[j]
// holds the bitmask of mu-atoms within eps of nu-atom j.
bool prohorov_one_sided(const AtomicMeasure& mu, const AtomicMeasure& nu, const Rat& eps) {
  const size_t m = mu.atoms.size(), n = nu.atoms.size();
  std::vector<unsigned long long> cover(n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < m; ++i) {
      QuadVal d = distance(nu.atoms[j].first, mu.atoms[i].first);
      if (qv_sign(d - QuadVal{eps, 0}) < 0) cover[j] |= 1ull << i;
    }
  for (unsigned long long mask = 1; mask < (1ull << m); ++mask) {
    Rat mu_a(0);
    for (size_t i = 0; i < m; ++i)
      if (mask & (1ull << i)) mu_a += mu.atoms[i].second;
    if (mu_a <= eps) continue;  // nu(N(A, eps)) >= 0 already suffices
    Rat nu_n(0);
    for (size_t j = 0; j < n; ++j)
      if (cover[j] & mask) nu_n += nu.atoms[j].second;
    if (mu_a > nu_n + eps) return false;
  }
  return true;
}

}  // namespace

bool prohorov_check(const AtomicMeasure& mu, const AtomicMeasure& nu, const Rat& eps) {
  check_same_space(mu.space, nu.space, "prohorov_check");
  if (mu.atoms.size() > kProhorovAtomCap || nu.atoms.size() > kProhorovAtomCap)
    throw std::invalid_argument("prohorov_check: too many atoms for subset enumeration");
  if (eps < 0) return false;
  return prohorov_one_sided(mu, nu, eps) && prohorov_one_sided(nu, mu, eps);
}

std::pair<Rat, Rat> prohorov(const AtomicMeasure& mu, const AtomicMeasure& nu, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("prohorov: tol must be positive");
  // check(0) always fails (the strict enlargement of anything at 0 is empty)
  // and check(1) always holds, so the invariant lo fails / hi holds is
  // available from the start.
  Rat lo(0), hi(1);
  if (prohorov_check(mu, nu, Rat(0))) throw std::logic_error("prohorov: impossible at 0");
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    if (prohorov_check(mu, nu, mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

MeasureOpen measure_open(BasicOpen base, const Rat& threshold) {
  return measure_open(std::vector<std::pair<BasicOpen, Rat>>{{std::move(base), threshold}});
}

MeasureOpen measure_open(std::vector<std::pair<BasicOpen, Rat>> conjuncts) {
  if (conjuncts.empty()) throw std::invalid_argument("measure_open: no conjuncts");
  SpaceId space = conjuncts.front().first.space;
  for (const auto& [base, threshold] : conjuncts) {
    check_same_space(space, base.space, "measure_open");
    if (threshold <= 0 || threshold >= 1)
      throw std::invalid_argument("measure_open: thresholds must lie in (0,1)");
  }
  return MeasureOpen{space, std::move(conjuncts)};
}

bool measure_open_member(const AtomicMeasure& mu, const MeasureOpen& o) {
  check_same_space(mu.space, o.space, "measure_open_member");
  for (const auto& [base, threshold] : o.conjuncts)
    if (measure_of(mu, open_set(base), "measure_open_member") <= threshold) return false;
  return true;
}

HittingSet measure_transitivity_times(const NASystem& sys, const MeasureOpen& o1,
                                      const MeasureOpen& o2, long long H,
                                      const std::vector<AtomicMeasure>& seeds) {
  check_same_space(sys.space, o1.space, "measure_transitivity_times");
  check_same_space(sys.space, o2.space, "measure_transitivity_times");
  if (H < 1) throw std::invalid_argument("measure_transitivity_times: horizon must be >= 1");
  if (H > run_config().horizon_cap)
    throw std::invalid_argument("measure_transitivity_times: horizon exceeds the configured cap");
  if (seeds.empty()) throw std::invalid_argument("measure_transitivity_times: no seeds");
  for (const AtomicMeasure& seed : seeds)
    if (!measure_open_member(seed, o1))
      throw std::invalid_argument("measure_transitivity_times: seed outside the source open");
  std::vector<AtomicMeasure> cur = seeds;
  std::vector<long long> members;
  for (long long n = 1; n <= H; ++n) {
    const ExactMap f = step_map(sys, n);
    bool hit = false;
    for (AtomicMeasure& mu : cur) {
      mu = pushforward_map(f, mu);
      hit = hit || measure_open_member(mu, o2);
    }
    if (hit) members.push_back(n);
  }
  return make_hitting_set(H, std::move(members), HitKind::Transitivity);
}

std::vector<AtomicMeasure> default_measure_seeds(const SpaceId& space, const Rat& net_eps,
                                                 int max_size) {
  if (max_size < 1) throw std::invalid_argument("default_measure_seeds: max_size must be >= 1");
  std::vector<Point> net = epsilon_net(space, net_eps);
  std::vector<AtomicMeasure> seeds;
  // Enumerate subsets of each size k via the lexicographically increasing
  // index combinations; callers keep the net coarse enough for this to stay
  // small.
  std::vector<size_t> idx;
  std::vector<Point> pts;
  auto emit = [&]() {
    pts.clear();
    for (size_t i : idx) pts.push_back(net[i]);
    seeds.push_back(empirical(pts));
  };
  for (int k = 1; k <= max_size && k <= static_cast<int>(net.size()); ++k) {
    idx.assign(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = static_cast<size_t>(i);
    while (true) {
      emit();
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == net.size() - static_cast<size_t>(k - i))
        --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return seeds;
}

}  // namespace nads
