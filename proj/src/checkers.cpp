#include "nads/checkers.hpp"

#include "nads/detail/structural.hpp"
#include "nads/serialize.hpp"

#include <algorithm>
#include <optional>

namespace nads {

namespace {

using nlohmann::json;
using namespace detail;

void check_horizon(long long H, const char* who) {
  if (H < 1) throw std::invalid_argument(std::string(who) + ": horizon must be >= 1");
  if (H > run_config().horizon_cap)
    throw std::invalid_argument(std::string(who) + ": horizon exceeds the configured cap");
}

bool qv_gt(const QuadVal& v, const Rat& r) { return qv_sign(v - QuadVal(r)) > 0; }
bool qv_lt(const QuadVal& v, const Rat& r) { return qv_sign(v - QuadVal(r)) < 0; }

// Ball radius around net points used by the sensitivity scans.
Rat candidate_radius(const SpaceId& space, const Rat& net_eps) {
  return Rat(space.kind == SpaceKind::Shift ? 2 : 8) * net_eps;
}

// Net points plus, for each one, the indices of the other net points lying
// strictly inside the given radius.
struct NetScan {
  std::vector<Point> net;
  std::vector<std::vector<size_t>> cand;
};

NetScan build_net_scan(const SpaceId& space, const Rat& net_eps, const Rat& radius) {
  NetScan ns;
  ns.net = epsilon_net(space, net_eps);
  const size_t n = ns.net.size();
  ns.cand.assign(n, {});
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (qv_lt(distance(ns.net[i], ns.net[j]), radius)) {
        ns.cand[i].push_back(j);
        ns.cand[j].push_back(i);
      }
    }
  }
  return ns;
}

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
  return qv_gt(distance(x, y), delta);
}

// Anchored separation scan: for each net point i, the times n <= H at which
// some candidate j separates from it beyond delta. first_witness, when
// given, receives per point the first separating (j, n) and the scan stops
// tracking that point afterwards.
std::vector<std::vector<long long>> anchored_times(
    const NASystem& sys, const NetScan& ns, const Rat& delta, long long H,
    std::vector<std::pair<size_t, long long>>* first_witness) {
  const size_t n_pts = ns.net.size();
  std::vector<std::vector<long long>> times(n_pts);
  if (first_witness) first_witness->assign(n_pts, {0, 0});
  std::vector<char> open_pt(n_pts, 1);
  auto record = [&](size_t i, size_t j, long long n) {
    times[i].push_back(n);
    if (first_witness && (*first_witness)[i].second == 0) {
      (*first_witness)[i] = {j, n};
      open_pt[i] = 0;
    }
  };

  if (sys.all_isometries) {
    // Distances are constant in time: a separating candidate separates at
    // every n and a non-separating one never does.
    for (size_t i = 0; i < n_pts; ++i) {
      for (size_t j : ns.cand[i]) {
        if (pair_separated(ns.net[i], ns.net[j], delta)) {
          if (first_witness) {
            record(i, j, 1);
          } else {
            for (long long n = 1; n <= H; ++n) times[i].push_back(n);
          }
          break;
        }
      }
    }
    return times;
  }

  if (all_steps_shift_powers(sys, H)) {
    // d(f_1^n x, f_1^n y) = profile(s_n mod L) for the cumulative exponent
    // s_n, so each pair needs one profile no matter the horizon.
    std::vector<std::vector<char>> sep(n_pts * n_pts);
    auto separated_at = [&](size_t i, size_t j, long long s) {
      size_t key = std::min(i, j) * n_pts + std::max(i, j);
      auto& row = sep[key];
      if (row.empty()) {
        auto profile = shift_distance_profile(ns.net[i].word(), ns.net[j].word());
        row.reserve(profile.size());
        for (const Rat& d : profile) row.push_back(d > delta ? 1 : 0);
      }
      return row[static_cast<size_t>(imod(s, static_cast<long long>(row.size())))] != 0;
    };
    long long s = 0;
    for (long long n = 1; n <= H; ++n) {
      const ExactMap f = step_map(sys, n);
      if (const auto* sp = std::get_if<ShiftPower>(&f.rep)) s += sp->k;
      for (size_t i = 0; i < n_pts; ++i) {
        if (first_witness && !open_pt[i]) continue;
        for (size_t j : ns.cand[i]) {
          if (separated_at(i, j, s)) {
            record(i, j, n);
            break;
          }
        }
      }
    }
    return times;
  }

  std::vector<Point> cur = ns.net;
  for (long long n = 1; n <= H; ++n) {
    const ExactMap f = step_map(sys, n);
    for (Point& x : cur) x = apply(f, x);
    for (size_t i = 0; i < n_pts; ++i) {
      if (first_witness && !open_pt[i]) continue;
      for (size_t j : ns.cand[i]) {
        if (pair_separated(cur[i], cur[j], delta)) {
          record(i, j, n);
          break;
        }
      }
    }
  }
  return times;
}

void check_basis(const std::vector<BasicOpen>& basis, const SpaceId& space, const char* who) {
  if (basis.empty()) throw std::invalid_argument(std::string(who) + ": empty basis");
  for (const BasicOpen& u : basis) {
    if (!(u.space == space)) throw std::invalid_argument(std::string(who) + ": space mismatch");
  }
}

json basis_json(const std::vector<BasicOpen>& basis) {
  json out = json::array();
  for (const BasicOpen& u : basis) out.push_back(open_to_json(u));
  return out;
}

}  // namespace

Verdict check_transitive(const NASystem& sys, const std::vector<BasicOpen>& basis, long long H) {
  check_basis(basis, sys.space, "check_transitive");
  check_horizon(H, "check_transitive");
  const size_t B = basis.size();
  json scale{{"horizon", H}, {"basis_size", static_cast<long long>(B)}};

  // First hit time per ordered pair; -1 while unhit. Unknown intersection
  // verdicts never count as hits and make refutations about that pair
  // unavailable.
  std::vector<long long> first_hit(B * B, -1);
  std::vector<char> saw_unknown(B * B, 0);
  for (size_t i = 0; i < B; ++i) {
    OpenSet img = open_set(basis[i]);
    size_t remaining = B;
    for (long long n = 1; n <= H && remaining > 0; ++n) {
      img = image_open(step_map(sys, n), img);
      for (size_t j = 0; j < B; ++j) {
        if (first_hit[i * B + j] >= 0) continue;
        Tri t = intersects(img, open_set(basis[j]));
        if (t == Tri::True) {
          first_hit[i * B + j] = n;
          --remaining;
        } else if (t == Tri::Unknown) {
          saw_unknown[i * B + j] = 1;
        }
      }
    }
  }

  std::optional<std::pair<size_t, size_t>> unhit;
  for (size_t i = 0; i < B && !unhit; ++i)
    for (size_t j = 0; j < B && !unhit; ++j)
      if (first_hit[i * B + j] < 0) unhit = {i, j};

  if (!unhit) {
    json pairs = json::array();
    for (size_t i = 0; i < B; ++i)
      for (size_t j = 0; j < B; ++j)
        pairs.push_back(json{{"from", i}, {"to", j}, {"n", first_hit[i * B + j]}});
    json w{{"kind", "pair-times"}, {"pairs", std::move(pairs)}, {"basis", basis_json(basis)}};
    return make_verdict(Outcome::Certified, "transitive", std::move(w), std::move(scale),
                        "every ordered basis pair is hit within the horizon");
  }

  const size_t ui = unhit->first, uj = unhit->second;
  std::string pair_txt = open_str(basis[ui]) + " -> " + open_str(basis[uj]);
  if (!saw_unknown[ui * B + uj]) {
    // The scan alone cannot refute; it can when the composite family is
    // eventually constant or finitely cyclic, because then [1, H] already
    // contains every image that will ever occur.
    if (sys.identity_from && *sys.identity_from - 1 <= H) {
      long long stable = std::max<long long>(*sys.identity_from - 1, 1);
      json w{{"kind", "identity-from"}, {"from", *sys.identity_from},   {"stable_time", stable},
             {"pair_from", ui},         {"to_open", open_to_json(basis[uj])},
             {"from_open", open_to_json(basis[ui])}};
      return make_verdict(Outcome::Refuted, "transitive", std::move(w), std::move(scale),
                          "image orbit is constant from time " + std::to_string(stable) +
                              " and still misses " + pair_txt);
    }
    if (auto comps = finite_composites(sys);
        comps && static_cast<long long>(comps->size()) <= H) {
      json w{{"kind", "periodic-counterexample"},
             {"period", *sys.period},
             {"modulus", static_cast<long long>(comps->size())},
             {"from_open", open_to_json(basis[ui])},
             {"to_open", open_to_json(basis[uj])}};
      return make_verdict(Outcome::Refuted, "transitive", std::move(w), std::move(scale),
                          "composites repeat with modulus " + std::to_string(comps->size()) +
                              " and never send " + pair_txt);
    }
  }
  return make_verdict(Outcome::Inconclusive, "transitive", {}, std::move(scale),
                      "no hitting time found for " + pair_txt + " within the horizon");
}

Verdict check_totally_transitive(const NASystem& sys, long long k_max,
                                 const std::vector<BasicOpen>& basis, long long H) {
  if (k_max < 1) throw std::invalid_argument("check_totally_transitive: k_max must be >= 1");
  check_basis(basis, sys.space, "check_totally_transitive");
  check_horizon(H, "check_totally_transitive");
  json per_k = json::array();
  json scale{{"horizon", H}, {"k_max", k_max}, {"basis_size", static_cast<long long>(basis.size())}};
  for (long long k = 1; k <= k_max; ++k) {
    // The k-th iterate reads original times up to k*H, so its usable horizon
    // shrinks accordingly.
    long long Hk = std::min(H, run_config().horizon_cap / k);
    if (Hk < 1) {
      return make_verdict(Outcome::Inconclusive, "totally-transitive", {}, std::move(scale),
                          "horizon cap leaves no room for the " + std::to_string(k) +
                              "-th iterate");
    }
    Verdict sub = check_transitive(kth_iterate_system(sys, k), basis, Hk);
    if (sub.outcome == Outcome::Refuted) {
      json w{{"kind", "iterate-refuted"}, {"k", k}, {"inner", sub.witness}};
      return make_verdict(Outcome::Refuted, "totally-transitive", std::move(w), std::move(scale),
                          "the " + std::to_string(k) + "-th iterate is not transitive: " +
                              sub.note);
    }
    if (sub.outcome != Outcome::Certified) {
      return make_verdict(Outcome::Inconclusive, "totally-transitive", {}, std::move(scale),
                          "the " + std::to_string(k) + "-th iterate stayed open: " + sub.note);
    }
    per_k.push_back(json{{"k", k}, {"horizon", Hk}, {"inner", sub.witness}});
  }
  json w{{"kind", "pair-times-per-k"}, {"per_k", std::move(per_k)}};
  return make_verdict(Outcome::Certified, "totally-transitive", std::move(w), std::move(scale),
                      "iterates 1.." + std::to_string(k_max) + " are each transitive");
}

namespace {

// Shared by the common-time checkers: per-source image orbits with per-target
// hit masks over [1, H], plus the Unknown bookkeeping.
struct CommonScan {
  std::vector<std::vector<char>> hit;  // [pair][n] with n in [1, H]
  bool saw_unknown = false;
};

CommonScan common_scan(const NASystem& sys, const std::vector<std::pair<BasicOpen, BasicOpen>>& prs,
                       long long H) {
  CommonScan out;
  out.hit.assign(prs.size(), std::vector<char>(static_cast<size_t>(H) + 1, 0));
  for (size_t p = 0; p < prs.size(); ++p) {
    OpenSet img = open_set(prs[p].first);
    OpenSet target = open_set(prs[p].second);
    for (long long n = 1; n <= H; ++n) {
      img = image_open(step_map(sys, n), img);
      Tri t = intersects(img, target);
      if (t == Tri::True) out.hit[p][static_cast<size_t>(n)] = 1;
      if (t == Tri::Unknown) out.saw_unknown = true;
    }
  }
  return out;
}

std::optional<long long> first_common(const CommonScan& scan, long long H) {
  for (long long n = 1; n <= H; ++n) {
    bool all = true;
    for (const auto& row : scan.hit) all = all && row[static_cast<size_t>(n)] != 0;
    if (all) return n;
  }
  return std::nullopt;
}

// Certificate that the scanned window already determines every future
// common-time status: identity tail (statuses freeze) or finite composite
// family (statuses repeat). Valid only when no Unknown occurred.
std::optional<json> window_complete_certificate(const NASystem& sys, long long H) {
  if (sys.identity_from && *sys.identity_from - 1 <= H) {
    return json{{"kind", "identity-from"},
                {"from", *sys.identity_from},
                {"stable_time", std::max<long long>(*sys.identity_from - 1, 1)}};
  }
  if (auto comps = finite_composites(sys);
      comps && static_cast<long long>(comps->size()) <= H) {
    return json{{"kind", "periodic-counterexample"},
                {"period", *sys.period},
                {"modulus", static_cast<long long>(comps->size())}};
  }
  return std::nullopt;
}

}  // namespace

Verdict check_weak_mixing(const NASystem& sys, int m,
                          const std::vector<std::pair<BasicOpen, BasicOpen>>& pairs,
                          long long H) {
  if (m < 1) throw std::invalid_argument("check_weak_mixing: m must be >= 1");
  if (pairs.size() != static_cast<size_t>(m))
    throw std::invalid_argument("check_weak_mixing: expected exactly m open pairs");
  for (const auto& [u, v] : pairs) {
    if (!(u.space == sys.space) || !(v.space == sys.space))
      throw std::invalid_argument("check_weak_mixing: space mismatch");
  }
  check_horizon(H, "check_weak_mixing");
  json scale{{"horizon", H}, {"m", m}};

  CommonScan scan = common_scan(sys, pairs, H);
  if (auto n = first_common(scan, H)) {
    json jp = json::array();
    for (const auto& [u, v] : pairs)
      jp.push_back(json{{"u", open_to_json(u)}, {"v", open_to_json(v)}});
    json w{{"kind", "common-time"}, {"n", *n}, {"pairs", std::move(jp)}};
    return make_verdict(Outcome::Certified, "weak-mixing", std::move(w), std::move(scale),
                        "all " + std::to_string(m) + " pairs hit simultaneously at n = " +
                            std::to_string(*n));
  }
  if (!scan.saw_unknown) {
    if (auto cert = window_complete_certificate(sys, H)) {
      json w = *cert;
      json jp = json::array();
      for (const auto& [u, v] : pairs)
        jp.push_back(json{{"u", open_to_json(u)}, {"v", open_to_json(v)}});
      w["pairs"] = std::move(jp);
      return make_verdict(Outcome::Refuted, "weak-mixing", std::move(w), std::move(scale),
                          "the scanned window determines every time and none is common");
    }
  }
  return make_verdict(Outcome::Inconclusive, "weak-mixing", {}, std::move(scale),
                      "no simultaneous hitting time within the horizon");
}

Verdict check_banks(const NASystem& sys, const BasicOpen& u, const BasicOpen& v,
                    const BasicOpen& w, long long H) {
  if (!(u.space == sys.space) || !(v.space == sys.space) || !(w.space == sys.space))
    throw std::invalid_argument("check_banks: space mismatch");
  check_horizon(H, "check_banks");
  json scale{{"horizon", H}};

  // When every map is an isometry the images of u keep their diameter, so
  // once the targets sit at least diam(u) apart no time can meet both: the
  // refutation covers every n, not just the scanned window.
  if (sys.all_isometries) {
    auto du = strict_diam_upper(u);
    auto gap = separation_lower(v, w);
    if (du && gap && qv_sign(*gap - QuadVal(*du)) >= 0) {
      json wit{{"kind", "isometry-separation"},
               {"diam", rat_to_json(*du)},
               {"gap", qv_str(*gap)},
               {"u", open_to_json(u)},
               {"targets", json::array({open_to_json(v), open_to_json(w)})}};
      return make_verdict(Outcome::Refuted, "banks", std::move(wit), std::move(scale),
                          "isometric images of " + open_str(u) +
                              " are too small to reach both targets at once");
    }
  }

  // One image orbit of u, checked against both targets at each step.
  OpenSet img = open_set(u);
  OpenSet tv = open_set(v), tw = open_set(w);
  bool saw_unknown = false;
  for (long long n = 1; n <= H; ++n) {
    img = image_open(step_map(sys, n), img);
    Tri a = intersects(img, tv);
    Tri b = intersects(img, tw);
    if (a == Tri::True && b == Tri::True) {
      json wit{{"kind", "common-time"},
               {"n", n},
               {"u", open_to_json(u)},
               {"targets", json::array({open_to_json(v), open_to_json(w)})}};
      return make_verdict(Outcome::Certified, "banks", std::move(wit), std::move(scale),
                          "the image of " + open_str(u) + " meets both targets at n = " +
                              std::to_string(n));
    }
    if (a == Tri::Unknown || b == Tri::Unknown) saw_unknown = true;
  }
  if (!saw_unknown) {
    if (auto cert = window_complete_certificate(sys, H)) {
      json wit = *cert;
      wit["u"] = open_to_json(u);
      wit["targets"] = json::array({open_to_json(v), open_to_json(w)});
      return make_verdict(Outcome::Refuted, "banks", std::move(wit), std::move(scale),
                          "the scanned window determines every time and none hits both targets");
    }
  }
  return make_verdict(Outcome::Inconclusive, "banks", {}, std::move(scale),
                      "no common time into both targets within the horizon");
}

namespace {

// Structural reasons why no pair within a radius-r neighborhood can ever
// separate beyond delta: constant distances, or a uniform Lipschitz bound
// over a composite family that is eventually constant or finitely cyclic.
std::optional<json> never_separates_certificate(const NASystem& sys, const Rat& delta,
                                                const Rat& radius_cap) {
  if (sys.all_isometries) {
    Rat r = std::min(radius_cap, Rat(delta / 2));
    return json{{"kind", "isometry-geometry"}, {"radius", rat_to_json(r)}};
  }
  if (sys.identity_from && *sys.identity_from <= kTailBound) {
    Rat K = prefix_lip_bound(sys, *sys.identity_from - 1);
    Rat r = std::min(radius_cap, Rat(delta / std::max(K, Rat(1))));
    return json{{"kind", "identity-from"},
                {"from", *sys.identity_from},
                {"lipschitz", rat_to_json(K)},
                {"radius", rat_to_json(r)}};
  }
  if (sys.period) {
    if (auto comps = finite_composites(sys)) {
      Rat K = max_lip(*comps);
      Rat r = std::min(radius_cap, Rat(delta / std::max(K, Rat(1))));
      return json{{"kind", "periodic-system"},
                  {"period", *sys.period},
                  {"modulus", static_cast<long long>(comps->size())},
                  {"lipschitz", rat_to_json(K)},
                  {"radius", rat_to_json(r)}};
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict check_sensitive(const NASystem& sys, const Rat& delta, const Rat& net_eps, long long H) {
  if (delta <= 0) throw std::invalid_argument("check_sensitive: delta must be positive");
  if (net_eps <= 0) throw std::invalid_argument("check_sensitive: net_eps must be positive");
  check_horizon(H, "check_sensitive");
  const Rat radius = candidate_radius(sys.space, net_eps);
  json scale{{"horizon", H},
             {"delta", rat_to_json(delta)},
             {"net_eps", rat_to_json(net_eps)},
             {"radius", rat_to_json(radius)}};

  // A structural certificate beats the scan: it rules out separation in some
  // neighborhood of every point at every time, not merely at net scale.
  if (auto cert = never_separates_certificate(sys, delta, radius)) {
    return make_verdict(Outcome::Refuted, "sensitive", *cert, std::move(scale),
                        "no pair in a ball of radius " + rat_str(rat_from_json((*cert)["radius"])) +
                            " ever separates beyond delta");
  }

  NetScan ns = build_net_scan(sys.space, net_eps, radius);
  scale["net_size"] = static_cast<long long>(ns.net.size());
  std::vector<std::pair<size_t, long long>> first;
  anchored_times(sys, ns, delta, H, &first);

  std::optional<size_t> missing;
  for (size_t i = 0; i < ns.net.size() && !missing; ++i)
    if (first[i].second == 0) missing = i;

  if (!missing) {
    json entries = json::array();
    for (size_t i = 0; i < ns.net.size(); ++i) {
      entries.push_back(json{{"x", point_to_json(ns.net[i])},
                             {"y", point_to_json(ns.net[first[i].first])},
                             {"n", first[i].second}});
    }
    json w{{"kind", "separation"},
           {"delta", rat_to_json(delta)},
           {"radius", rat_to_json(radius)},
           {"entries", std::move(entries)}};
    return make_verdict(Outcome::Certified, "sensitive", std::move(w), std::move(scale),
                        "every net point separates from a net candidate within the horizon");
  }
  const Point& x = ns.net[*missing];
  std::string why = ns.cand[*missing].empty()
                        ? "has no net candidate inside radius " + rat_str(radius)
                        : "never separates from its candidates within the horizon";
  return make_verdict(Outcome::Inconclusive, "sensitive", {}, std::move(scale),
                      "net point " + point_str(x) + " " + why);
}

namespace {

const char* variant_name(SensVariant v) {
  switch (v) {
    case SensVariant::Cofinite: return "cofinite-sensitive";
    case SensVariant::Syndetic: return "syndetic-sensitive";
    case SensVariant::Thick: return "thick-sensitive";
    case SensVariant::Ergodic: return "ergodic-sensitive";
  }
  return "?";
}

ClassVerdict classify_variant(const HittingSet& hs, SensVariant v, long long scale_param,
                              const Rat& rho) {
  switch (v) {
    case SensVariant::Cofinite: return classify_cofinite(hs, scale_param);
    case SensVariant::Syndetic: return classify_syndetic(hs, scale_param);
    case SensVariant::Thick: return classify_thick(hs, scale_param);
    case SensVariant::Ergodic: return classify_upper_density(hs, rho);
  }
  throw std::logic_error("unreachable variant");
}

}  // namespace

Verdict check_sensitivity_variant(const NASystem& sys, SensVariant variant, const Rat& delta,
                                  const Rat& net_eps, long long H, long long scale_param,
                                  const Rat& rho) {
  if (delta <= 0) throw std::invalid_argument("check_sensitivity_variant: delta must be positive");
  if (net_eps <= 0)
    throw std::invalid_argument("check_sensitivity_variant: net_eps must be positive");
  check_horizon(H, "check_sensitivity_variant");
  const std::string prop = variant_name(variant);
  switch (variant) {
    case SensVariant::Cofinite:
      if (scale_param < 1 || scale_param > H)
        throw std::invalid_argument("check_sensitivity_variant: N must lie in [1, horizon]");
      break;
    case SensVariant::Syndetic:
      if (scale_param < 0)
        throw std::invalid_argument("check_sensitivity_variant: a must be >= 0");
      break;
    case SensVariant::Thick:
      if (scale_param < 1)
        throw std::invalid_argument("check_sensitivity_variant: p must be >= 1");
      break;
    case SensVariant::Ergodic:
      if (rho <= 0 || rho > 1)
        throw std::invalid_argument("check_sensitivity_variant: rho must lie in (0, 1]");
      break;
  }
  // Neighborhoods of diameter <= delta keep the identity-time and
  // isometry arguments valid: inside them the pairs sit closer than delta.
  const Rat radius = std::min(candidate_radius(sys.space, net_eps), Rat(delta / 2));
  json scale{{"horizon", H},
             {"delta", rat_to_json(delta)},
             {"net_eps", rat_to_json(net_eps)},
             {"radius", rat_to_json(radius)},
             {"param", scale_param}};
  if (variant == SensVariant::Ergodic) scale["rho"] = rat_to_json(rho);

  if (auto cert = never_separates_certificate(sys, delta, radius)) {
    (*cert)["variant"] = prop;
    return make_verdict(Outcome::Refuted, prop, *cert, std::move(scale),
                        "no separation time exists at all, so the time set fails every "
                        "classification");
  }

  // Exact identity times of the prefix composites bound the true time set of
  // every radius-capped neighborhood from above: when f_1^n is the identity,
  // n separates nothing.
  std::vector<char> ident = identity_times(sys, H);
  if (sys.identity_cycle) {
    long long L = *sys.identity_cycle;
    if (variant == SensVariant::Cofinite) {
      json w{{"kind", "identity-cycle"}, {"cycle", L}, {"variant", prop},
             {"radius", rat_to_json(radius)}};
      return make_verdict(Outcome::Refuted, prop, std::move(w), std::move(scale),
                          "every multiple of " + std::to_string(L) +
                              " is an identity time, so no tail is all-separating");
    }
    if (variant == SensVariant::Thick && scale_param >= L) {
      json w{{"kind", "identity-cycle"}, {"cycle", L}, {"variant", prop},
             {"radius", rat_to_json(radius)}, {"p", scale_param}};
      return make_verdict(Outcome::Refuted, prop, std::move(w), std::move(scale),
                          "identity times every " + std::to_string(L) +
                              " steps cap separation runs below p");
    }
  }
  {
    // Window refutations from identity times alone; these are exact
    // statements about [1, H] for arbitrary points and neighborhoods of the
    // capped radius, not just for the net.
    std::vector<long long> nonident;
    for (long long n = 1; n <= H; ++n)
      if (!ident[static_cast<size_t>(n)]) nonident.push_back(n);
    HittingSet upper = make_hitting_set(H, nonident, HitKind::Sensitivity);
    ClassVerdict cv = classify_variant(upper, variant, scale_param, rho);
    if (!cv.satisfied) {
      json w{{"kind", "identity-window"},
             {"variant", prop},
             {"radius", rat_to_json(radius)},
             {"detail", cv.details}};
      return make_verdict(Outcome::Refuted, prop, std::move(w), std::move(scale),
                          "even counting every non-identity time as separating, the window "
                          "[1, " + std::to_string(H) + "] fails the classification");
    }
  }

  NetScan ns = build_net_scan(sys.space, net_eps, radius);
  scale["net_size"] = static_cast<long long>(ns.net.size());
  auto times = anchored_times(sys, ns, delta, H, nullptr);
  for (size_t i = 0; i < ns.net.size(); ++i) {
    HittingSet hs = make_hitting_set(H, times[i], HitKind::Sensitivity);
    ClassVerdict cv = classify_variant(hs, variant, scale_param, rho);
    if (!cv.satisfied) {
      return make_verdict(Outcome::Inconclusive, prop, {}, std::move(scale),
                          "net point " + point_str(ns.net[i]) +
                              " realized too few separation times at net scale");
    }
  }
  json entries = json::array();
  for (size_t i = 0; i < ns.net.size(); ++i) {
    entries.push_back(json{{"x", point_to_json(ns.net[i])},
                           {"count", static_cast<long long>(times[i].size())}});
  }
  json w{{"kind", "variant-table"},
         {"variant", prop},
         {"radius", rat_to_json(radius)},
         {"delta", rat_to_json(delta)},
         {"entries", std::move(entries)}};
  return make_verdict(Outcome::Certified, prop, std::move(w), std::move(scale),
                      "every net point's separation time set passes the classification");
}

Verdict check_multi_sensitive(const NASystem& sys, const std::vector<BasicOpen>& opens,
                              const Rat& delta, long long H, const Rat& net_eps) {
  if (opens.empty()) throw std::invalid_argument("check_multi_sensitive: no opens given");
  for (const BasicOpen& u : opens) {
    if (!(u.space == sys.space))
      throw std::invalid_argument("check_multi_sensitive: space mismatch");
  }
  if (delta <= 0) throw std::invalid_argument("check_multi_sensitive: delta must be positive");
  check_horizon(H, "check_multi_sensitive");
  json scale{{"horizon", H},
             {"delta", rat_to_json(delta)},
             {"net_eps", rat_to_json(net_eps)},
             {"opens", static_cast<long long>(opens.size())}};

  // Structural impossibility for one open silences every common time: pairs
  // inside it can never stretch past delta.
  for (size_t i = 0; i < opens.size(); ++i) {
    Rat diam = diam_upper(opens[i]);
    bool never = false;
    json cert;
    if (sys.all_isometries && diam <= delta) {
      cert = json{{"kind", "isometry-geometry"}, {"open_index", i},
                  {"diam", rat_to_json(diam)}};
      never = true;
    } else if (sys.identity_from && *sys.identity_from <= kTailBound) {
      Rat K = prefix_lip_bound(sys, *sys.identity_from - 1);
      if (K * diam <= delta) {
        cert = json{{"kind", "identity-from"}, {"open_index", i},
                    {"from", *sys.identity_from}, {"lipschitz", rat_to_json(K)},
                    {"diam", rat_to_json(diam)}};
        never = true;
      }
    } else if (sys.period) {
      if (auto comps = finite_composites(sys)) {
        Rat K = max_lip(*comps);
        if (K * diam <= delta) {
          cert = json{{"kind", "periodic-system"}, {"open_index", i},
                      {"period", *sys.period}, {"lipschitz", rat_to_json(K)},
                      {"diam", rat_to_json(diam)}};
          never = true;
        }
      }
    }
    if (never) {
      cert["open"] = open_to_json(opens[i]);
      return make_verdict(Outcome::Refuted, "multi-sensitive", std::move(cert), std::move(scale),
                          "pairs inside " + open_str(opens[i]) +
                              " can never separate beyond delta");
    }
  }

  std::vector<HittingSet> sets;
  sets.reserve(opens.size());
  for (const BasicOpen& u : opens)
    sets.push_back(sensitivity_times(sys, open_set(u), delta, H, net_eps));
  for (long long n = 1; n <= H; ++n) {
    bool all = true;
    for (const HittingSet& hs : sets) all = all && hs.contains(n);
    if (all) {
      json jo = json::array();
      for (const BasicOpen& u : opens) jo.push_back(open_to_json(u));
      json w{{"kind", "common-time"}, {"n", n}, {"opens", std::move(jo)},
             {"delta", rat_to_json(delta)}, {"net_eps", rat_to_json(net_eps)}};
      return make_verdict(Outcome::Certified, "multi-sensitive", std::move(w), std::move(scale),
                          "all opens hold separated net pairs at n = " + std::to_string(n));
    }
  }
  return make_verdict(Outcome::Inconclusive, "multi-sensitive", {}, std::move(scale),
                      "no common separation time within the horizon");
}

Verdict check_collective_sensitive(const NASystem& sys, const std::vector<Point>& points,
                                   const Rat& eps, const Rat& delta, long long H,
                                   const Rat& net_eps) {
  if (points.empty()) throw std::invalid_argument("check_collective_sensitive: no points given");
  for (const Point& x : points) {
    if (!(x.space == sys.space))
      throw std::invalid_argument("check_collective_sensitive: space mismatch");
  }
  if (eps <= 0 || delta <= 0)
    throw std::invalid_argument("check_collective_sensitive: eps and delta must be positive");
  check_horizon(H, "check_collective_sensitive");
  const size_t m = points.size();
  json scale{{"horizon", H},
             {"eps", rat_to_json(eps)},
             {"delta", rat_to_json(delta)},
             {"net_eps", rat_to_json(net_eps)},
             {"point_count", static_cast<long long>(m)}};
  json pts_json = json::array();
  for (const Point& x : points) pts_json.push_back(point_to_json(x));

  // Structural refutation: with constant distances (or a uniform Lipschitz
  // bound K over every composite), any perturbation y of x_i0 keeps
  // d(f^n x_i, f^n y) <= K * (d(x_i, x_i0) + eps); if that stays within delta
  // for every choice of i0, no configuration can ever succeed.
  auto spread_bound = [&](const Rat& K) {
    if (K == 0) return true;
    for (size_t i0 = 0; i0 < m; ++i0) {
      QuadVal worst(Rat(0));
      for (size_t i = 0; i < m; ++i) worst = qv_max(worst, distance(points[i], points[i0]));
      // K * (worst + eps) <= delta, compared without scaling the alpha part.
      if (qv_sign(worst + QuadVal(eps) - QuadVal(delta / K)) > 0) return false;
    }
    return true;
  };
  if (sys.all_isometries && spread_bound(Rat(1))) {
    json w{{"kind", "isometry-geometry"}, {"eps", rat_to_json(eps)},
           {"delta", rat_to_json(delta)}, {"points", pts_json}};
    return make_verdict(Outcome::Refuted, "collective-sensitive", std::move(w), std::move(scale),
                        "distances are constant and every anchor sits within delta of every "
                        "perturbation");
  }
  if (sys.identity_from && *sys.identity_from <= kTailBound) {
    Rat K = prefix_lip_bound(sys, *sys.identity_from - 1);
    if (spread_bound(K)) {
      json w{{"kind", "identity-from"}, {"from", *sys.identity_from},
             {"lipschitz", rat_to_json(K)}, {"eps", rat_to_json(eps)},
             {"delta", rat_to_json(delta)}, {"points", pts_json}};
      return make_verdict(Outcome::Refuted, "collective-sensitive", std::move(w), std::move(scale),
                          "the Lipschitz bound over the identity tail keeps every configuration "
                          "within delta");
    }
  }
  if (sys.period) {
    if (auto comps = finite_composites(sys)) {
      Rat K = max_lip(*comps);
      if (spread_bound(K)) {
        json w{{"kind", "periodic-system"}, {"period", *sys.period},
               {"lipschitz", rat_to_json(K)}, {"eps", rat_to_json(eps)},
               {"delta", rat_to_json(delta)}, {"points", pts_json}};
        return make_verdict(Outcome::Refuted, "collective-sensitive", std::move(w),
                            std::move(scale),
                            "the Lipschitz bound over the composite family keeps every "
                            "configuration within delta");
      }
    }
  }

  // Perturbation candidates come from the net.
  std::vector<Point> net = epsilon_net(sys.space, net_eps);
  std::vector<std::vector<size_t>> cand(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t z = 0; z < net.size(); ++z) {
      if (!point_eq(points[i], net[z]) && qv_lt(distance(points[i], net[z]), eps))
        cand[i].push_back(z);
    }
  }
  bool any = false;
  for (const auto& c : cand) any = any || !c.empty();
  if (!any) {
    return make_verdict(Outcome::Inconclusive, "collective-sensitive", {}, std::move(scale),
                        "the net offers no perturbation within eps of any anchor");
  }

  std::vector<Point> anchors = points;
  std::vector<Point> moved = net;
  for (long long n = 1; n <= H; ++n) {
    const ExactMap f = step_map(sys, n);
    for (Point& x : anchors) x = apply(f, x);
    for (Point& y : moved) y = apply(f, y);
    for (size_t i0 = 0; i0 < m; ++i0) {
      for (size_t y0 : cand[i0]) {
        json rows = json::array();
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i) {
          if (pair_separated(anchors[i], moved[y0], delta)) {
            rows.push_back(json{{"i", i}, {"mode", "anchor"}});
            continue;
          }
          bool found = false;
          for (size_t yi : cand[i]) {
            if (pair_separated(moved[yi], anchors[i0], delta)) {
              rows.push_back(json{{"i", i}, {"mode", "perturb"}, {"y", point_to_json(net[yi])}});
              found = true;
              break;
            }
          }
          ok = found;
        }
        if (ok) {
          json w{{"kind", "collective"},
                 {"n", n},
                 {"i0", i0},
                 {"y0", point_to_json(net[y0])},
                 {"eps", rat_to_json(eps)},
                 {"delta", rat_to_json(delta)},
                 {"points", pts_json},
                 {"rows", std::move(rows)}};
          return make_verdict(Outcome::Certified, "collective-sensitive", std::move(w),
                              std::move(scale),
                              "a common time with anchor index " + std::to_string(i0) +
                                  " works at n = " + std::to_string(n));
        }
      }
    }
  }
  return make_verdict(Outcome::Inconclusive, "collective-sensitive", {}, std::move(scale),
                      "no collective separation time within the horizon");
}

Verdict check_dense_periodic(const NASystem& sys, const Rat& net_eps, long long n_max,
                             long long K) {
  if (net_eps <= 0) throw std::invalid_argument("check_dense_periodic: net_eps must be positive");
  if (n_max < 1 || K < 1)
    throw std::invalid_argument("check_dense_periodic: n_max and K must be >= 1");
  json scale{{"net_eps", rat_to_json(net_eps)}, {"n_max", n_max}, {"K", K}};

  // A periodic system whose period composition carries a nonzero multiple of
  // alpha has no periodic points at all: f_1^{nm} = g^n moves every point by
  // an irrational angle.
  if (sys.space.kind == SpaceKind::Circle && sys.space.arity == 1 && sys.period) {
    ExactMap g = period_composition(sys);
    if (const auto* rot = std::get_if<RotationOffset>(&g.rep)) {
      if (rot->q != 0) {
        json w{{"kind", "no-periodic-point"},
               {"period", *sys.period},
               {"rotation", qv_str(QuadVal(rot->p, rot->q))}};
        return make_verdict(Outcome::Refuted, "dense-periodic", std::move(w), std::move(scale),
                            "the period composition rotates by an irrational angle, so no point "
                            "ever returns");
      }
    }
  }

  std::vector<Point> net = epsilon_net(sys.space, net_eps);
  scale["net_size"] = static_cast<long long>(net.size());

  // Identity tail: periodic points are exactly the fixed points of the
  // stable composite, so density is decided by the exact fixed set.
  if (sys.identity_from && *sys.identity_from <= kTailBound) {
    long long stable = std::max<long long>(*sys.identity_from - 1, 1);
    FixedSet fs = fixed_points(segment_raw(sys, 1, stable));
    json entries = json::array();
    for (const Point& x : net) {
      std::optional<Point> nearby;
      if (fs.all) {
        nearby = x;
      } else {
        for (const Point& p : fs.points) {
          if (qv_lt(distance(x, p), net_eps)) {
            nearby = p;
            break;
          }
        }
        if (!nearby && sys.space.kind == SpaceKind::Interval) {
          const Rat& xv = x.interval();
          for (const auto& [lo, hi] : fs.segments) {
            Rat clamped = std::min(std::max(xv, lo), hi);
            if (abs(xv - clamped) < net_eps) {
              nearby = interval_point(clamped);
              break;
            }
          }
        }
      }
      if (!nearby) {
        json w{{"kind", "no-periodic-point"},
               {"x", point_to_json(x)},
               {"stable_time", stable}};
        return make_verdict(Outcome::Refuted, "dense-periodic", std::move(w), std::move(scale),
                            "the exact fixed set of the stable composite misses the net point " +
                                point_str(x) + " by more than net_eps");
      }
      entries.push_back(json{{"x", point_to_json(x)},
                             {"p", point_to_json(*nearby)},
                             {"n", stable},
                             {"certificate", "eventually-identity"}});
    }
    json w{{"kind", "dense-periodic"}, {"entries", std::move(entries)}};
    return make_verdict(Outcome::Certified, "dense-periodic", std::move(w), std::move(scale),
                        "fixed points of the stable composite lie within net_eps of every net "
                        "point");
  }

  // Candidates for the periodic point near a target: the target itself,
  // then nearby rationals of small denominator (or shift words from a finer
  // net), since periodic points rarely sit on the scan grid itself.
  auto candidates_near = [&](const Point& x) {
    std::vector<Point> out{x};
    if (sys.space.kind == SpaceKind::Interval && sys.space.arity == 1) {
      long long D = std::min<long long>(64, 3 * (rat_den(net_eps) / rat_num(net_eps) + 1)
                                                 .convert_to<long long>());
      const Rat& xv = x.interval();
      for (long long q = 1; q <= D; ++q) {
        for (long long p = 0; p <= q; ++p) {
          Rat c(p, q);
          if (rat_den(c) != q) continue;  // only reduced fractions, once each
          if (abs(xv - c) < net_eps) out.push_back(interval_point(c));
        }
      }
    } else if (sys.space.kind == SpaceKind::Circle && sys.space.arity == 1) {
      long long D = std::min<long long>(64, 3 * (rat_den(net_eps) / rat_num(net_eps) + 1)
                                                 .convert_to<long long>());
      for (long long q = 1; q <= D; ++q) {
        for (long long p = 0; p < q; ++p) {
          Rat c(p, q);
          if (rat_den(c) != q) continue;
          Point cp = circle_point(c, 0);
          if (qv_lt(distance(x, cp), net_eps) && !point_eq(x, cp)) out.push_back(cp);
        }
      }
    } else if (sys.space.kind == SpaceKind::Shift && sys.space.arity == 1) {
      for (const Point& w : epsilon_net(sys.space, net_eps / 2)) {
        if (!point_eq(x, w) && qv_lt(distance(x, w), net_eps)) out.push_back(w);
      }
    }
    return out;
  };

  json entries = json::array();
  bool bounded_only = false;
  for (const Point& x : net) {
    std::optional<json> entry;
    bool x_bounded = false;
    long long cap_n = std::min(n_max, run_config().horizon_cap / K);
    for (const Point& p : candidates_near(x)) {
      for (long long n = 1; n <= cap_n && !entry; ++n) {
        Verdict pv = check_periodic_point(sys, p, n, K);
        if (pv.outcome == Outcome::Certified) {
          entry = json{{"x", point_to_json(x)},
                       {"p", point_to_json(p)},
                       {"n", n},
                       {"certificate", "periodic-point"}};
        } else if (pv.outcome == Outcome::HoldsUpToBound) {
          x_bounded = true;
        }
      }
      if (entry) break;
    }
    if (!entry && x_bounded) {
      bounded_only = true;
      continue;
    }
    if (!entry) {
      return make_verdict(Outcome::Inconclusive, "dense-periodic", {}, std::move(scale),
                          "no certified return found near net point " + point_str(x));
    }
    entries.push_back(std::move(*entry));
  }
  if (bounded_only) {
    return make_verdict(Outcome::HoldsUpToBound, "dense-periodic", {}, std::move(scale),
                        "every net point returns through depth K but some lack a structural "
                        "certificate");
  }
  json w{{"kind", "dense-periodic"}, {"entries", std::move(entries)}};
  return make_verdict(Outcome::Certified, "dense-periodic", std::move(w), std::move(scale),
                      "every net point is certified periodic in place");
}

Verdict check_dense_small_periodic(const NASystem& sys, const std::vector<BasicOpen>& basis,
                                   long long K) {
  check_basis(basis, sys.space, "check_dense_small_periodic");
  if (K < 1) throw std::invalid_argument("check_dense_small_periodic: K must be >= 1");
  json scale{{"K", K}, {"basis_size", static_cast<long long>(basis.size())}};

  if (sys.space.kind == SpaceKind::Circle && sys.space.arity == 1 && sys.period) {
    ExactMap g = period_composition(sys);
    if (const auto* rot = std::get_if<RotationOffset>(&g.rep)) {
      if (rot->q != 0) {
        json w{{"kind", "no-invariant-set"},
               {"period", *sys.period},
               {"rotation", qv_str(QuadVal(rot->p, rot->q))}};
        return make_verdict(Outcome::Refuted, "dense-small-periodic", std::move(w),
                            std::move(scale),
                            "an irrational rotation admits no finite invariant set");
      }
    }
  }

  // Map-level certificate: an n with f_1^{nk} = id for every k keeps any
  // single point invariant as a set.
  std::optional<long long> n_cert;
  std::string cert_name;
  if (sys.identity_cycle) {
    n_cert = *sys.identity_cycle;
    cert_name = "identity-cycle";
  } else if (sys.period) {
    if (auto t = map_order(segment_raw(sys, 1, *sys.period), kOrderBound)) {
      n_cert = *sys.period * *t;
      cert_name = "periodic-composition";
    }
  }
  if (!n_cert) {
    return make_verdict(Outcome::Inconclusive, "dense-small-periodic", {}, std::move(scale),
                        "no identity-segment certificate available for this system");
  }
  for (long long k = 1; k <= K; ++k) {
    if (!is_identity(segment_raw(sys, 1, *n_cert * k)))
      throw std::logic_error("check_dense_small_periodic: declared certificate fails");
  }

  json entries = json::array();
  for (const BasicOpen& u : basis) {
    std::optional<Point> inside = witness_point(u, u);
    if (!inside) {
      return make_verdict(Outcome::Inconclusive, "dense-small-periodic", {}, std::move(scale),
                          "no concrete point available inside " + open_str(u));
    }
    entries.push_back(json{{"u", open_to_json(u)},
                           {"x", point_to_json(*inside)},
                           {"n", *n_cert},
                           {"certificate", cert_name}});
  }
  json w{{"kind", "periodic-cover"}, {"entries", std::move(entries)}};
  return make_verdict(Outcome::Certified, "dense-small-periodic", std::move(w), std::move(scale),
                      "each basis open holds a singleton made invariant by n = " +
                          std::to_string(*n_cert));
}

Verdict check_devaney(const NASystem& sys, const std::vector<BasicOpen>& basis, const Rat& delta,
                      const Rat& net_eps, long long H, long long n_max, long long K) {
  Verdict trans = check_transitive(sys, basis, H);
  Verdict dense = check_dense_periodic(sys, net_eps, n_max, K);
  Verdict sens = check_sensitive(sys, delta, net_eps, H);
  json scale{{"horizon", H},
             {"delta", rat_to_json(delta)},
             {"net_eps", rat_to_json(net_eps)},
             {"n_max", n_max},
             {"K", K},
             {"basis_size", static_cast<long long>(basis.size())}};
  auto part = [](const Verdict& v) {
    return json{{"outcome", outcome_str(v.outcome)}, {"witness", v.witness}, {"note", v.note}};
  };
  json parts{{"transitive", part(trans)},
             {"dense-periodic", part(dense)},
             {"sensitive", part(sens)}};

  const Verdict* failed = nullptr;
  if (trans.outcome == Outcome::Refuted) failed = &trans;
  if (!failed && dense.outcome == Outcome::Refuted) failed = &dense;
  if (!failed && sens.outcome == Outcome::Refuted) failed = &sens;
  if (failed) {
    json w{{"kind", "devaney"}, {"failed", failed->property}, {"parts", std::move(parts)}};
    return make_verdict(Outcome::Refuted, "devaney", std::move(w), std::move(scale),
                        "component refuted: " + failed->property + " (" + failed->note + ")");
  }
  bool all_cert = trans.outcome == Outcome::Certified && dense.outcome == Outcome::Certified &&
                  sens.outcome == Outcome::Certified;
  if (all_cert) {
    json w{{"kind", "devaney"}, {"parts", std::move(parts)}};
    return make_verdict(Outcome::Certified, "devaney", std::move(w), std::move(scale),
                        "transitivity, dense periodicity and sensitivity all certified");
  }
  bool bounded = (trans.outcome == Outcome::Certified || trans.outcome == Outcome::HoldsUpToBound) &&
                 (dense.outcome == Outcome::Certified || dense.outcome == Outcome::HoldsUpToBound) &&
                 (sens.outcome == Outcome::Certified || sens.outcome == Outcome::HoldsUpToBound);
  if (bounded) {
    return make_verdict(Outcome::HoldsUpToBound, "devaney", {}, std::move(scale),
                        "all components hold to their bounds but at least one lacks a "
                        "certificate");
  }
  std::string open_part = trans.outcome != Outcome::Certified  ? trans.property
                          : dense.outcome != Outcome::Certified ? dense.property
                                                                : sens.property;
  return make_verdict(Outcome::Inconclusive, "devaney", {}, std::move(scale),
                      "component stayed open: " + open_part);
}

Verdict check_minimal_approx(const NASystem& sys, const Rat& net_eps, long long H) {
  if (net_eps <= 0) throw std::invalid_argument("check_minimal_approx: net_eps must be positive");
  check_horizon(H, "check_minimal_approx");
  std::vector<Point> net = epsilon_net(sys.space, net_eps);
  const size_t N = net.size();
  json scale{{"horizon", H}, {"net_eps", rat_to_json(net_eps)},
             {"net_size", static_cast<long long>(N)}};

  // covered[i][z]: orbit of net[i] has come within net_eps of net[z].
  std::vector<std::vector<char>> covered(N, std::vector<char>(N, 0));
  std::vector<long long> cover_time(N, 0);
  std::vector<size_t> left(N, N);
  auto touch = [&](size_t i, const Point& where, long long n) {
    for (size_t z = 0; z < N; ++z) {
      if (!covered[i][z] && qv_sign(distance(where, net[z]) - QuadVal(net_eps)) <= 0) {
        covered[i][z] = 1;
        --left[i];
        cover_time[i] = n;
      }
    }
  };
  for (size_t i = 0; i < N; ++i) touch(i, net[i], 0);
  std::vector<Point> cur = net;
  size_t open_orbits = 0;
  for (size_t i = 0; i < N; ++i) open_orbits += left[i] > 0 ? 1 : 0;
  for (long long n = 1; n <= H && open_orbits > 0; ++n) {
    const ExactMap f = step_map(sys, n);
    for (size_t i = 0; i < N; ++i) {
      cur[i] = apply(f, cur[i]);
      if (left[i] == 0) continue;
      touch(i, cur[i], n);
      if (left[i] == 0) --open_orbits;
    }
  }

  std::optional<std::pair<size_t, size_t>> gap;
  for (size_t i = 0; i < N && !gap; ++i) {
    if (left[i] == 0) continue;
    for (size_t z = 0; z < N && !gap; ++z)
      if (!covered[i][z]) gap = {i, z};
  }
  if (!gap) {
    json entries = json::array();
    for (size_t i = 0; i < N; ++i)
      entries.push_back(json{{"x", point_to_json(net[i])}, {"cover_time", cover_time[i]}});
    json w{{"kind", "orbit-dense"}, {"entries", std::move(entries)},
           {"net_eps", rat_to_json(net_eps)}};
    return make_verdict(Outcome::Certified, "minimal-approx", std::move(w), std::move(scale),
                        "every net orbit visits the net_eps-ball of every net point");
  }

  const Point& x = net[gap->first];
  const Point& z = net[gap->second];
  // With an identity tail (or a finite composite family) the scanned orbit
  // is already the whole orbit, so a missed target stays missed forever.
  std::optional<json> cert;
  if (sys.identity_from && *sys.identity_from - 1 <= H) {
    cert = json{{"kind", "orbit-gap"}, {"certificate", "eventually-identity"},
                {"from", *sys.identity_from}};
  } else if (sys.period) {
    if (auto comps = finite_composites(sys);
        comps && static_cast<long long>(comps->size()) <= H) {
      cert = json{{"kind", "orbit-gap"}, {"certificate", "periodic-composition"},
                  {"modulus", static_cast<long long>(comps->size())}};
    }
  }
  if (cert) {
    (*cert)["x"] = point_to_json(x);
    (*cert)["z"] = point_to_json(z);
    return make_verdict(Outcome::Refuted, "minimal-approx", *cert, std::move(scale),
                        "the complete orbit of " + point_str(x) + " stays farther than net_eps "
                        "from " + point_str(z));
  }
  return make_verdict(Outcome::Inconclusive, "minimal-approx", {}, std::move(scale),
                      "orbit of " + point_str(x) + " has not reached " + point_str(z) +
                          " within the horizon");
}

}  // namespace nads
