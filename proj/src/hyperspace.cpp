#include "nads/hyperspace.hpp"

#include <algorithm>

namespace nads {

FiniteCompact finite_compact(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("finite_compact: no points");
  SpaceId space = pts.front().space;
  for (const Point& p : pts)
    if (p.space != space) throw std::invalid_argument("finite_compact: space mismatch");
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end(), point_eq), pts.end());
  return FiniteCompact{space, std::move(pts)};
}

QuadVal hausdorff(const FiniteCompact& a, const FiniteCompact& b) {
  if (a.space != b.space) throw std::invalid_argument("hausdorff: space mismatch");
  auto directed = [](const FiniteCompact& from, const FiniteCompact& to) {
    QuadVal worst{Rat(0), 0};
    for (const Point& x : from.pts) {
      QuadVal best = distance(x, to.pts.front());
      for (size_t j = 1; j < to.pts.size(); ++j)
        best = qv_min(best, distance(x, to.pts[j]));
      worst = qv_max(worst, best);
    }
    return worst;
  };
  return qv_max(directed(a, b), directed(b, a));
}

FiniteCompact induced_image(const NASystem& sys, const FiniteCompact& a, long long n) {
  if (sys.space != a.space) throw std::invalid_argument("induced_image: space mismatch");
  if (n < 0) throw std::invalid_argument("induced_image: n must be >= 0");
  std::vector<Point> pts = a.pts;
  for (long long i = 1; i <= n; ++i) {
    const ExactMap f = step_map(sys, i);
    for (Point& p : pts) p = apply(f, p);
  }
  return finite_compact(std::move(pts));
}

VietorisOpen vietoris_open(std::vector<BasicOpen> parts) {
  if (parts.empty()) throw std::invalid_argument("vietoris_open: no parts");
  SpaceId space = parts.front().space;
  for (const BasicOpen& u : parts)
    if (u.space != space) throw std::invalid_argument("vietoris_open: space mismatch");
  return VietorisOpen{space, std::move(parts)};
}

Tri vietoris_member(const FiniteCompact& a, const VietorisOpen& o) {
  if (a.space != o.space) throw std::invalid_argument("vietoris_member: space mismatch");
  // A belongs to <U_1, ..., U_k> when A is covered by the union and meets
  // every part. Unknown memberships poison whichever side they could flip.
  bool cover_unknown = false;
  for (const Point& p : a.pts) {
    bool in_some = false, unknown_here = false;
    for (const BasicOpen& u : o.parts) {
      Tri t = member(p, u);
      if (t == Tri::True) {
        in_some = true;
        break;
      }
      if (t == Tri::Unknown) unknown_here = true;
    }
    if (!in_some) {
      if (!unknown_here) return Tri::False;
      cover_unknown = true;
    }
  }
  bool meet_unknown = false;
  for (const BasicOpen& u : o.parts) {
    bool meets = false, unknown_here = false;
    for (const Point& p : a.pts) {
      Tri t = member(p, u);
      if (t == Tri::True) {
        meets = true;
        break;
      }
      if (t == Tri::Unknown) unknown_here = true;
    }
    if (!meets) {
      if (!unknown_here) return Tri::False;
      meet_unknown = true;
    }
  }
  if (cover_unknown || meet_unknown) return Tri::Unknown;
  return Tri::True;
}

HittingSet hyper_transitivity_times(const NASystem& sys, const VietorisOpen& o1,
                                    const VietorisOpen& o2, long long H,
                                    const std::vector<FiniteCompact>& seeds) {
  if (o1.space != sys.space || o2.space != sys.space)
    throw std::invalid_argument("hyper_transitivity_times: space mismatch");
  if (H < 1) throw std::invalid_argument("hyper_transitivity_times: horizon must be >= 1");
  if (H > run_config().horizon_cap)
    throw std::invalid_argument("hyper_transitivity_times: horizon exceeds the configured cap");
  if (seeds.empty()) throw std::invalid_argument("hyper_transitivity_times: no seeds");
  for (const FiniteCompact& seed : seeds) {
    if (seed.space != sys.space)
      throw std::invalid_argument("hyper_transitivity_times: seed space mismatch");
    if (vietoris_member(seed, o1) != Tri::True)
      throw std::invalid_argument("hyper_transitivity_times: seed outside the source open");
  }
  std::vector<FiniteCompact> cur = seeds;
  std::vector<long long> members;
  for (long long n = 1; n <= H; ++n) {
    const ExactMap f = step_map(sys, n);
    bool hit = false;
    for (FiniteCompact& a : cur) {
      std::vector<Point> pts = std::move(a.pts);
      for (Point& p : pts) p = apply(f, p);
      a = finite_compact(std::move(pts));
      if (!hit) {
        Tri t = vietoris_member(a, o2);
        if (t == Tri::Unknown)
          throw PrecisionError("hyper_transitivity_times: undecided membership at n=" +
                               std::to_string(n));
        hit = t == Tri::True;
      }
    }
    if (hit) members.push_back(n);
  }
  return make_hitting_set(H, std::move(members), HitKind::Transitivity);
}

std::vector<FiniteCompact> default_seed_sets(const SpaceId& space, const Rat& net_eps,
                                             int max_size) {
  if (max_size < 1) throw std::invalid_argument("default_seed_sets: max_size must be >= 1");
  std::vector<Point> net = epsilon_net(space, net_eps);
  std::vector<FiniteCompact> seeds;
  std::vector<size_t> idx;
  std::vector<Point> pts;
  for (int k = 1; k <= max_size && k <= static_cast<int>(net.size()); ++k) {
    idx.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = static_cast<size_t>(i);
    while (true) {
      pts.clear();
      for (size_t i : idx) pts.push_back(net[i]);
      seeds.push_back(finite_compact(pts));
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
