#include "nads/report.hpp"

#include "nads/detail/structural.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

namespace nads {

namespace {

using nlohmann::json;

bool qv_lt(const QuadVal& v, const Rat& r) { return qv_sign(v - QuadVal(r)) < 0; }
bool qv_gt(const QuadVal& v, const Rat& r) { return qv_sign(v - QuadVal(r)) > 0; }

// ---------------------------------------------------------------------------
// Parameter handling. Unknown keys are rejected so that a typo in a config
// fails loudly instead of silently running with defaults.

void require_keys(const json& params, std::initializer_list<const char*> allowed,
                  const std::string& prop) {
  for (auto it = params.begin(); it != params.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok)
      throw std::invalid_argument("unknown parameter '" + it.key() + "' for property " + prop);
  }
}

long long get_int(const json& params, const char* key, long long fallback) {
  if (!params.contains(key)) return fallback;
  const json& j = params.at(key);
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("parameter '") + key + "' must be an integer");
  return j.get<long long>();
}

Rat get_rat(const json& params, const char* key, const Rat& fallback) {
  if (!params.contains(key)) return fallback;
  return rat_from_json(params.at(key));
}

size_t pick_index(const json& j, size_t size, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("expected a basis index in '") + what + "'");
  long long v = j.get<long long>();
  if (v < 0 || v >= static_cast<long long>(size))
    throw std::invalid_argument(std::string("basis index out of range in '") + what + "'");
  return static_cast<size_t>(v);
}

Rat default_net_eps(const SpaceId& space) {
  if (space.kind == SpaceKind::Interval) return Rat(1, 32);
  if (space.kind == SpaceKind::Circle) return Rat(1, 16);
  return Rat(1, 2);
}

Rat default_delta(const SpaceId& space) {
  return space.kind == SpaceKind::Shift ? Rat(1) : Rat(1, 4);
}

// Basis selection: one mesh-like knob per space, defaulting to the space's
// standard basis.
std::vector<BasicOpen> resolve_basis(const SpaceId& space, const json& params, json& resolved) {
  const bool has_mesh = params.contains("mesh");
  const bool has_half = params.contains("half_range");
  const bool has_radius = params.contains("radius");
  if (space.kind == SpaceKind::Interval) {
    if (has_half || has_radius)
      throw std::invalid_argument("only 'mesh' selects a basis on the interval");
    if (has_mesh) {
      Rat mesh = rat_from_json(params.at("mesh"));
      resolved["mesh"] = rat_to_json(mesh);
      return interval_basis(mesh);
    }
  } else if (space.kind == SpaceKind::Shift) {
    if (has_mesh || has_radius)
      throw std::invalid_argument("only 'half_range' selects a basis on the shift space");
    if (has_half) {
      long long hr = get_int(params, "half_range", 1);
      resolved["half_range"] = hr;
      return shift_basis(hr);
    }
  } else {
    if (has_mesh || has_half)
      throw std::invalid_argument("only 'radius' selects a basis on the circle");
    if (has_radius) {
      Rat r = rat_from_json(params.at("radius"));
      resolved["radius"] = rat_to_json(r);
      return circle_basis(r);
    }
  }
  return default_basis(space);
}

std::optional<SensVariant> variant_from_prop(const std::string& prop) {
  if (prop == "cofinite-sensitive") return SensVariant::Cofinite;
  if (prop == "syndetic-sensitive") return SensVariant::Syndetic;
  if (prop == "thick-sensitive") return SensVariant::Thick;
  if (prop == "ergodic-sensitive") return SensVariant::Ergodic;
  return std::nullopt;
}

ClassVerdict classify_for(SensVariant v, const HittingSet& hs, long long param, const Rat& rho) {
  switch (v) {
    case SensVariant::Cofinite: return classify_cofinite(hs, param);
    case SensVariant::Syndetic: return classify_syndetic(hs, param);
    case SensVariant::Thick: return classify_thick(hs, param);
    case SensVariant::Ergodic: return classify_upper_density(hs, rho);
  }
  throw std::logic_error("unreachable variant");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> property_catalog() {
  return {
      {"transitive", "every ordered pair of basis opens is hit within the horizon"},
      {"totally-transitive", "transitivity of each of the first k iterate systems"},
      {"weak-mixing", "one common hitting time for the chosen open pairs"},
      {"banks", "one open's image meets two targets at the same time"},
      {"sensitive", "every net point separates beyond delta from a nearby candidate"},
      {"cofinite-sensitive", "separation times contain a whole tail [N, H]"},
      {"syndetic-sensitive", "separation times leave no gap longer than a"},
      {"thick-sensitive", "separation times contain a run of length p"},
      {"ergodic-sensitive", "separation times have density at least rho"},
      {"multi-sensitive", "one common separation time for several opens"},
      {"collective-sensitive", "a perturbed configuration separates collectively"},
      {"dense-periodic", "a certified periodic point within net_eps of every net point"},
      {"dense-small-periodic", "every basis open holds a point of a finite invariant set"},
      {"devaney", "transitive plus dense periodic points plus sensitive"},
      {"minimal-approx", "every net orbit visits every net ball within the horizon"},
  };
}

json run_analysis(const AnalysisConfig& config) {
  Fixture fx = build_fixture(fixture_from_name(config.fixture), config.fixture_params);
  json params = config.property_params.is_null() ? json::object() : config.property_params;
  if (!params.is_object())
    throw std::invalid_argument("property parameters must be a JSON object");
  const NASystem& sys = fx.system;
  const SpaceId& space = sys.space;
  const std::string& prop = config.property;
  json resolved = json::object();
  Verdict v;

  auto read_horizon = [&]() {
    long long H = get_int(params, "horizon", 64);
    resolved["horizon"] = H;
    return H;
  };
  auto read_delta = [&]() {
    Rat d = get_rat(params, "delta", default_delta(space));
    resolved["delta"] = rat_to_json(d);
    return d;
  };
  auto read_net_eps = [&]() {
    Rat e = get_rat(params, "net_eps", default_net_eps(space));
    resolved["net_eps"] = rat_to_json(e);
    return e;
  };

  if (prop == "transitive") {
    require_keys(params, {"horizon", "mesh", "half_range", "radius"}, prop);
    long long H = read_horizon();
    auto basis = resolve_basis(space, params, resolved);
    resolved["basis_size"] = static_cast<long long>(basis.size());
    v = check_transitive(sys, basis, H);
  } else if (prop == "totally-transitive") {
    require_keys(params, {"horizon", "k_max", "mesh", "half_range", "radius"}, prop);
    long long H = read_horizon();
    long long k_max = get_int(params, "k_max", 3);
    resolved["k_max"] = k_max;
    auto basis = resolve_basis(space, params, resolved);
    resolved["basis_size"] = static_cast<long long>(basis.size());
    v = check_totally_transitive(sys, k_max, basis, H);
  } else if (prop == "weak-mixing") {
    require_keys(params, {"horizon", "pairs", "mesh", "half_range", "radius"}, prop);
    long long H = read_horizon();
    auto basis = resolve_basis(space, params, resolved);
    json jp = params.contains("pairs")
                  ? params.at("pairs")
                  : json::array({json::array({0, 1}), json::array({1, 0})});
    if (!jp.is_array() || jp.empty())
      throw std::invalid_argument("weak-mixing: 'pairs' must be a non-empty array of [i, j]");
    std::vector<std::pair<BasicOpen, BasicOpen>> pairs;
    for (const json& e : jp) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("weak-mixing: each pair must be a two-element index array");
      pairs.emplace_back(basis[pick_index(e[0], basis.size(), "pairs")],
                         basis[pick_index(e[1], basis.size(), "pairs")]);
    }
    resolved["pairs"] = jp;
    v = check_weak_mixing(sys, static_cast<int>(pairs.size()), pairs, H);
  } else if (prop == "banks") {
    require_keys(params, {"horizon", "u", "v", "w", "mesh", "half_range", "radius"}, prop);
    long long H = read_horizon();
    auto basis = resolve_basis(space, params, resolved);
    size_t iu = params.contains("u") ? pick_index(params.at("u"), basis.size(), "u") : 0;
    size_t iv = params.contains("v") ? pick_index(params.at("v"), basis.size(), "v")
                                     : std::min<size_t>(1, basis.size() - 1);
    size_t iw = params.contains("w") ? pick_index(params.at("w"), basis.size(), "w") : 0;
    resolved["u"] = iu;
    resolved["v"] = iv;
    resolved["w"] = iw;
    v = check_banks(sys, basis[iu], basis[iv], basis[iw], H);
  } else if (prop == "sensitive") {
    require_keys(params, {"horizon", "delta", "net_eps"}, prop);
    long long H = read_horizon();
    Rat delta = read_delta();
    Rat net_eps = read_net_eps();
    v = check_sensitive(sys, delta, net_eps, H);
  } else if (auto var = variant_from_prop(prop)) {
    if (*var == SensVariant::Ergodic) {
      require_keys(params, {"horizon", "delta", "net_eps", "rho"}, prop);
    } else {
      require_keys(params, {"horizon", "delta", "net_eps", "param"}, prop);
    }
    long long H = read_horizon();
    Rat delta = read_delta();
    Rat net_eps = read_net_eps();
    long long param = 0;
    Rat rho(0);
    if (*var == SensVariant::Ergodic) {
      rho = get_rat(params, "rho", Rat(1, 2));
      resolved["rho"] = rat_to_json(rho);
    } else {
      param = get_int(params, "param", *var == SensVariant::Cofinite ? 1 : 2);
      resolved["param"] = param;
    }
    v = check_sensitivity_variant(sys, *var, delta, net_eps, H, param, rho);
  } else if (prop == "multi-sensitive") {
    require_keys(params, {"horizon", "delta", "net_eps", "opens", "mesh", "half_range", "radius"},
                 prop);
    long long H = read_horizon();
    Rat delta = read_delta();
    Rat net_eps = read_net_eps();
    auto basis = resolve_basis(space, params, resolved);
    std::vector<BasicOpen> opens;
    if (params.contains("opens")) {
      const json& jo = params.at("opens");
      if (!jo.is_array() || jo.empty())
        throw std::invalid_argument("multi-sensitive: 'opens' must be a non-empty index array");
      for (const json& e : jo) opens.push_back(basis[pick_index(e, basis.size(), "opens")]);
    } else {
      opens = basis;
    }
    json echo = json::array();
    for (const BasicOpen& u : opens) echo.push_back(open_to_json(u));
    resolved["opens"] = std::move(echo);
    v = check_multi_sensitive(sys, opens, delta, H, net_eps);
  } else if (prop == "collective-sensitive") {
    require_keys(params, {"horizon", "delta", "net_eps", "eps", "points"}, prop);
    long long H = read_horizon();
    Rat delta = read_delta();
    Rat net_eps = read_net_eps();
    Rat eps = get_rat(params, "eps", Rat(2) * net_eps);
    resolved["eps"] = rat_to_json(eps);
    std::vector<Point> pts;
    if (params.contains("points")) {
      const json& jp = params.at("points");
      if (!jp.is_array() || jp.empty())
        throw std::invalid_argument("collective-sensitive: 'points' must be a non-empty array");
      for (const json& e : jp) pts.push_back(point_from_json(e));
    } else {
      std::vector<Point> net = epsilon_net(space, net_eps);
      pts.assign(net.begin(), net.begin() + std::min<size_t>(2, net.size()));
    }
    json echo = json::array();
    for (const Point& x : pts) echo.push_back(point_to_json(x));
    resolved["points"] = std::move(echo);
    v = check_collective_sensitive(sys, pts, eps, delta, H, net_eps);
  } else if (prop == "dense-periodic") {
    require_keys(params, {"net_eps", "n_max", "K"}, prop);
    Rat net_eps = read_net_eps();
    long long n_max = get_int(params, "n_max", 8);
    long long K = get_int(params, "K", 3);
    resolved["n_max"] = n_max;
    resolved["K"] = K;
    v = check_dense_periodic(sys, net_eps, n_max, K);
  } else if (prop == "dense-small-periodic") {
    require_keys(params, {"K", "mesh", "half_range", "radius"}, prop);
    long long K = get_int(params, "K", 3);
    resolved["K"] = K;
    auto basis = resolve_basis(space, params, resolved);
    resolved["basis_size"] = static_cast<long long>(basis.size());
    v = check_dense_small_periodic(sys, basis, K);
  } else if (prop == "devaney") {
    require_keys(params,
                 {"horizon", "delta", "net_eps", "n_max", "K", "mesh", "half_range", "radius"},
                 prop);
    long long H = read_horizon();
    Rat delta = read_delta();
    Rat net_eps = read_net_eps();
    long long n_max = get_int(params, "n_max", 8);
    long long K = get_int(params, "K", 3);
    resolved["n_max"] = n_max;
    resolved["K"] = K;
    auto basis = resolve_basis(space, params, resolved);
    resolved["basis_size"] = static_cast<long long>(basis.size());
    v = check_devaney(sys, basis, delta, net_eps, H, n_max, K);
  } else if (prop == "minimal-approx") {
    require_keys(params, {"horizon", "net_eps"}, prop);
    long long H = read_horizon();
    Rat net_eps = read_net_eps();
    v = check_minimal_approx(sys, net_eps, H);
  } else {
    throw std::invalid_argument("unknown property: " + prop);
  }

  return json{{"format", "nads-report"},
              {"version", 1},
              {"fixture", json{{"name", fixture_name(fx.id)},
                               {"params", fx.params},
                               {"description", fx.description}}},
              {"property", prop},
              {"parameters", resolved},
              {"verdict", verdict_to_json(v)}};
}

// ---------------------------------------------------------------------------
// Witness replay. Each replayer re-derives the claimed evidence from the
// lower modules; a single recomputation that disagrees fails the whole
// verdict. Malformed witness fields surface as exceptions and are treated as
// replay failures by the dispatcher.

namespace {

// Certified transitivity: recompute each source's image orbit and confirm the
// recorded hit time of every ordered pair.
bool replay_pair_times(const NASystem& sys, const json& w) {
  std::vector<BasicOpen> basis;
  for (const json& ju : w.at("basis")) basis.push_back(open_from_json(ju));
  const size_t B = basis.size();
  if (B == 0) return false;
  std::vector<long long> t(B * B, -1);
  for (const json& e : w.at("pairs")) {
    size_t i = e.at("from").get<size_t>();
    size_t j = e.at("to").get<size_t>();
    long long n = e.at("n").get<long long>();
    if (i >= B || j >= B || n < 1) return false;
    t[i * B + j] = n;
  }
  for (long long n : t)
    if (n < 0) return false;
  for (size_t i = 0; i < B; ++i) {
    long long last = 0;
    for (size_t j = 0; j < B; ++j) last = std::max(last, t[i * B + j]);
    OpenSet img = open_set(basis[i]);
    for (long long n = 1; n <= last; ++n) {
      img = image_open(step_map(sys, n), img);
      for (size_t j = 0; j < B; ++j) {
        if (t[i * B + j] == n && intersects(img, open_set(basis[j])) != Tri::True) return false;
      }
    }
  }
  return true;
}

// Refuted transitivity via an eventually constant image orbit: the scan up to
// the stabilization time must come back all-False.
bool replay_transitive_tail(const NASystem& sys, const json& w) {
  long long from = w.at("from").get<long long>();
  long long stable = w.at("stable_time").get<long long>();
  if (!sys.identity_from || *sys.identity_from != from) return false;
  if (stable != std::max<long long>(from - 1, 1)) return false;
  OpenSet img = open_set(open_from_json(w.at("from_open")));
  OpenSet target = open_set(open_from_json(w.at("to_open")));
  for (long long n = 1; n <= stable; ++n) {
    img = image_open(step_map(sys, n), img);
    if (intersects(img, target) != Tri::False) return false;
  }
  return true;
}

// Refuted transitivity via a finite composite family: every composite image
// must miss the target.
bool replay_transitive_cycle(const NASystem& sys, const json& w) {
  if (!sys.period || *sys.period != w.at("period").get<long long>()) return false;
  auto comps = detail::finite_composites(sys);
  if (!comps || static_cast<long long>(comps->size()) != w.at("modulus").get<long long>())
    return false;
  OpenSet u = open_set(open_from_json(w.at("from_open")));
  OpenSet target = open_set(open_from_json(w.at("to_open")));
  for (const ExactMap& c : *comps) {
    if (intersects(image_open(c, u), target) != Tri::False) return false;
  }
  return true;
}

bool replay_transitive(const NASystem& sys, Outcome outcome, const json& w) {
  const std::string kind = w.at("kind").get<std::string>();
  if (outcome == Outcome::Certified) return kind == "pair-times" && replay_pair_times(sys, w);
  if (kind == "identity-from") return replay_transitive_tail(sys, w);
  if (kind == "periodic-counterexample") return replay_transitive_cycle(sys, w);
  return false;
}

// Common-time scan over a window for pairs (u_p, v_p): fails when any status
// is Unknown (the window argument needs exactness) or some time is common.
bool window_has_no_common_time(const NASystem& sys,
                               const std::vector<std::pair<OpenSet, OpenSet>>& pairs,
                               long long window) {
  std::vector<OpenSet> imgs;
  imgs.reserve(pairs.size());
  for (const auto& [u, tgt] : pairs) imgs.push_back(u);
  for (long long n = 1; n <= window; ++n) {
    const ExactMap f = step_map(sys, n);
    bool common = true;
    for (size_t p = 0; p < pairs.size(); ++p) {
      imgs[p] = image_open(f, imgs[p]);
      Tri t = intersects(imgs[p], pairs[p].second);
      if (t == Tri::Unknown) return false;
      common = common && t == Tri::True;
    }
    if (common) return false;
  }
  return true;
}

// Validates the structural window bound carried by a common-time refutation
// and returns the window length to rescan.
std::optional<long long> refutation_window(const NASystem& sys, const json& w) {
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "identity-from") {
    long long from = w.at("from").get<long long>();
    if (!sys.identity_from || *sys.identity_from != from) return std::nullopt;
    long long stable = w.at("stable_time").get<long long>();
    if (stable != std::max<long long>(from - 1, 1)) return std::nullopt;
    return stable;
  }
  if (kind == "periodic-counterexample") {
    if (!sys.period || *sys.period != w.at("period").get<long long>()) return std::nullopt;
    auto comps = detail::finite_composites(sys);
    long long modulus = w.at("modulus").get<long long>();
    if (!comps || static_cast<long long>(comps->size()) != modulus) return std::nullopt;
    return modulus;
  }
  return std::nullopt;
}

bool replay_weak_mixing(const NASystem& sys, Outcome outcome, const json& w) {
  std::vector<std::pair<OpenSet, OpenSet>> pairs;
  for (const json& e : w.at("pairs")) {
    pairs.emplace_back(open_set(open_from_json(e.at("u"))),
                       open_set(open_from_json(e.at("v"))));
  }
  if (pairs.empty()) return false;
  if (outcome == Outcome::Certified) {
    if (w.at("kind").get<std::string>() != "common-time") return false;
    long long n = w.at("n").get<long long>();
    if (n < 1) return false;
    for (auto& [img, target] : pairs) {
      for (long long k = 1; k <= n; ++k) img = image_open(step_map(sys, k), img);
      if (intersects(img, target) != Tri::True) return false;
    }
    return true;
  }
  auto window = refutation_window(sys, w);
  return window && window_has_no_common_time(sys, pairs, *window);
}

bool isometry_spot_check(const NASystem& sys, long long H);

bool replay_banks(const NASystem& sys, Outcome outcome, const json& w) {
  OpenSet u = open_set(open_from_json(w.at("u")));
  const json& jt = w.at("targets");
  if (!jt.is_array() || jt.size() != 2) return false;
  OpenSet tv = open_set(open_from_json(jt[0]));
  OpenSet tw = open_set(open_from_json(jt[1]));
  if (outcome == Outcome::Certified) {
    if (w.at("kind").get<std::string>() != "common-time") return false;
    long long n = w.at("n").get<long long>();
    if (n < 1) return false;
    OpenSet img = u;
    for (long long k = 1; k <= n; ++k) img = image_open(step_map(sys, k), img);
    return intersects(img, tv) == Tri::True && intersects(img, tw) == Tri::True;
  }
  if (w.at("kind").get<std::string>() == "isometry-separation") {
    // Recompute both geometric bounds from the recorded opens; the claim
    // holds for all times exactly when the gap dominates the diameter.
    if (!sys.all_isometries || !isometry_spot_check(sys, 16)) return false;
    auto du = detail::strict_diam_upper(open_from_json(w.at("u")));
    auto gap = detail::separation_lower(open_from_json(jt[0]), open_from_json(jt[1]));
    if (!du || !gap) return false;
    if (rat_from_json(w.at("diam")) != *du) return false;
    if (w.at("gap").get<std::string>() != qv_str(*gap)) return false;
    return qv_sign(*gap - QuadVal(*du)) >= 0;
  }
  auto window = refutation_window(sys, w);
  if (!window) return false;
  OpenSet img = u;
  for (long long n = 1; n <= *window; ++n) {
    img = image_open(step_map(sys, n), img);
    Tri a = intersects(img, tv);
    Tri b = intersects(img, tw);
    if (a == Tri::Unknown || b == Tri::Unknown) return false;
    if (a == Tri::True && b == Tri::True) return false;
  }
  return true;
}

// Spot check of the all-isometries flag: the first few steps must be
// invertible with unit Lipschitz bounds both ways.
bool isometry_spot_check(const NASystem& sys, long long H) {
  for (long long n = 1; n <= std::min<long long>(H, 16); ++n) {
    if (!detail::map_is_isometry_upper(step_map(sys, n))) return false;
  }
  return true;
}

// Structural no-separation certificates for ball neighborhoods: pairs within
// the recorded radius of a center can never stretch past delta.
bool replay_never_separates(const NASystem& sys, const json& w, const Rat& delta, long long H) {
  const std::string kind = w.at("kind").get<std::string>();
  Rat radius = rat_from_json(w.at("radius"));
  if (radius <= 0 || delta <= 0) return false;
  if (kind == "isometry-geometry") {
    if (!sys.all_isometries || !isometry_spot_check(sys, H)) return false;
    return radius <= delta;
  }
  if (kind == "identity-from") {
    long long from = w.at("from").get<long long>();
    if (!sys.identity_from || *sys.identity_from != from) return false;
    Rat K = detail::prefix_lip_bound(sys, from - 1);
    if (K != rat_from_json(w.at("lipschitz"))) return false;
    return K * radius <= delta;
  }
  if (kind == "periodic-system") {
    if (!sys.period || *sys.period != w.at("period").get<long long>()) return false;
    auto comps = detail::finite_composites(sys);
    if (!comps) return false;
    if (w.contains("modulus") &&
        static_cast<long long>(comps->size()) != w.at("modulus").get<long long>())
      return false;
    Rat K = detail::max_lip(*comps);
    if (K != rat_from_json(w.at("lipschitz"))) return false;
    return K * radius <= delta;
  }
  return false;
}

// Certified sensitivity: the separation table must cover the whole net and
// every entry must reproduce under exact iteration.
bool replay_separation(const NASystem& sys, const json& w, const json& scale) {
  Rat delta = rat_from_json(w.at("delta"));
  Rat radius = rat_from_json(w.at("radius"));
  Rat net_eps = rat_from_json(scale.at("net_eps"));
  std::vector<Point> net = epsilon_net(sys.space, net_eps);
  const json& entries = w.at("entries");
  if (!entries.is_array() || entries.size() != net.size()) return false;
  for (size_t i = 0; i < net.size(); ++i) {
    const json& e = entries[i];
    Point x = point_from_json(e.at("x"));
    Point y = point_from_json(e.at("y"));
    long long n = e.at("n").get<long long>();
    if (!point_eq(x, net[i]) || n < 1) return false;
    if (!qv_lt(distance(x, y), radius)) return false;
    for (long long k = 1; k <= n; ++k) {
      const ExactMap f = step_map(sys, k);
      x = apply(f, x);
      y = apply(f, y);
    }
    if (!qv_gt(distance(x, y), delta)) return false;
  }
  return true;
}

bool replay_sensitive(const NASystem& sys, Outcome outcome, const json& w, const json& scale) {
  if (outcome == Outcome::Certified) {
    return w.at("kind").get<std::string>() == "separation" && replay_separation(sys, w, scale);
  }
  Rat delta = rat_from_json(scale.at("delta"));
  long long H = scale.at("horizon").get<long long>();
  return replay_never_separates(sys, w, delta, H);
}

// Exact identity times at every multiple of the cycle; checked by composing
// the first few multiples.
bool replay_identity_cycle(const NASystem& sys, const json& w) {
  long long cycle = w.at("cycle").get<long long>();
  if (!sys.identity_cycle || *sys.identity_cycle != cycle || cycle < 1) return false;
  for (long long k = 1; k <= 3; ++k) {
    if (!is_identity(segment_raw(sys, 1, cycle * k))) return false;
  }
  const std::string variant = w.at("variant").get<std::string>();
  if (variant == "cofinite-sensitive") return true;
  if (variant == "thick-sensitive") return w.at("p").get<long long>() >= cycle;
  return false;
}

// Window refutation: even the overestimate that counts every non-identity
// time as separating fails the classification on [1, H].
bool replay_identity_window(const NASystem& sys, const json& w, const json& scale) {
  auto var = variant_from_prop(w.at("variant").get<std::string>());
  if (!var) return false;
  long long H = scale.at("horizon").get<long long>();
  if (H < 1) return false;
  long long param = scale.value("param", 0LL);
  Rat rho = scale.contains("rho") ? rat_from_json(scale.at("rho")) : Rat(0);
  std::vector<char> ident = detail::identity_times(sys, H);
  std::vector<long long> nonident;
  for (long long n = 1; n <= H; ++n) {
    if (!ident[static_cast<size_t>(n)]) nonident.push_back(n);
  }
  HittingSet upper = make_hitting_set(H, nonident, HitKind::Sensitivity);
  return !classify_for(*var, upper, param, rho).satisfied;
}

// Certified variant: the checker is deterministic for fixed inputs, so a
// fresh run must rebuild the identical table.
bool replay_variant_table(const NASystem& sys, const json& w, const json& scale) {
  auto var = variant_from_prop(w.at("variant").get<std::string>());
  if (!var) return false;
  Rat delta = rat_from_json(scale.at("delta"));
  Rat net_eps = rat_from_json(scale.at("net_eps"));
  long long H = scale.at("horizon").get<long long>();
  long long param = scale.value("param", 0LL);
  Rat rho = scale.contains("rho") ? rat_from_json(scale.at("rho")) : Rat(0);
  Verdict again = check_sensitivity_variant(sys, *var, delta, net_eps, H, param, rho);
  return again.outcome == Outcome::Certified && again.witness == w;
}

bool replay_variant(const NASystem& sys, const std::string& prop, Outcome outcome, const json& w,
                    const json& scale) {
  const std::string kind = w.at("kind").get<std::string>();
  if (outcome == Outcome::Certified) {
    return kind == "variant-table" && w.at("variant").get<std::string>() == prop &&
           replay_variant_table(sys, w, scale);
  }
  if (w.at("variant").get<std::string>() != prop) return false;
  if (kind == "identity-cycle") return replay_identity_cycle(sys, w);
  if (kind == "identity-window") return replay_identity_window(sys, w, scale);
  Rat delta = rat_from_json(scale.at("delta"));
  long long H = scale.at("horizon").get<long long>();
  return replay_never_separates(sys, w, delta, H);
}

// Structural no-stretch certificates for a specific open: its diameter bound
// times the family's Lipschitz bound stays within delta.
bool replay_never_stretches(const NASystem& sys, const json& w, const Rat& delta, long long H) {
  const std::string kind = w.at("kind").get<std::string>();
  BasicOpen u = open_from_json(w.at("open"));
  Rat diam = rat_from_json(w.at("diam"));
  if (diam_upper(u) != diam) return false;
  if (kind == "isometry-geometry") {
    if (!sys.all_isometries || !isometry_spot_check(sys, H)) return false;
    return diam <= delta;
  }
  if (kind == "identity-from") {
    long long from = w.at("from").get<long long>();
    if (!sys.identity_from || *sys.identity_from != from) return false;
    Rat K = detail::prefix_lip_bound(sys, from - 1);
    if (K != rat_from_json(w.at("lipschitz"))) return false;
    return K * diam <= delta;
  }
  if (kind == "periodic-system") {
    if (!sys.period || *sys.period != w.at("period").get<long long>()) return false;
    auto comps = detail::finite_composites(sys);
    if (!comps) return false;
    Rat K = detail::max_lip(*comps);
    if (K != rat_from_json(w.at("lipschitz"))) return false;
    return K * diam <= delta;
  }
  return false;
}

bool replay_multi(const NASystem& sys, Outcome outcome, const json& w, const json& scale) {
  if (outcome == Outcome::Certified) {
    if (w.at("kind").get<std::string>() != "common-time") return false;
    long long n = w.at("n").get<long long>();
    long long H = scale.at("horizon").get<long long>();
    Rat delta = rat_from_json(w.at("delta"));
    Rat net_eps = rat_from_json(w.at("net_eps"));
    if (n < 1 || n > H) return false;
    for (const json& ju : w.at("opens")) {
      BasicOpen u = open_from_json(ju);
      if (!sensitivity_times(sys, open_set(u), delta, H, net_eps).contains(n)) return false;
    }
    return true;
  }
  Rat delta = rat_from_json(scale.at("delta"));
  long long H = scale.at("horizon").get<long long>();
  return replay_never_stretches(sys, w, delta, H);
}

// Collective structural refutations: a uniform Lipschitz bound K keeps every
// perturbed configuration within delta, whichever anchor is chosen.
bool replay_collective_structural(const NASystem& sys, const json& w, long long H) {
  const std::string kind = w.at("kind").get<std::string>();
  Rat eps = rat_from_json(w.at("eps"));
  Rat delta = rat_from_json(w.at("delta"));
  std::vector<Point> pts;
  for (const json& jp : w.at("points")) pts.push_back(point_from_json(jp));
  if (pts.empty() || eps <= 0 || delta <= 0) return false;
  Rat K(1);
  if (kind == "isometry-geometry") {
    if (!sys.all_isometries || !isometry_spot_check(sys, H)) return false;
  } else if (kind == "identity-from") {
    long long from = w.at("from").get<long long>();
    if (!sys.identity_from || *sys.identity_from != from) return false;
    K = detail::prefix_lip_bound(sys, from - 1);
    if (K != rat_from_json(w.at("lipschitz"))) return false;
  } else if (kind == "periodic-system") {
    if (!sys.period || *sys.period != w.at("period").get<long long>()) return false;
    auto comps = detail::finite_composites(sys);
    if (!comps) return false;
    K = detail::max_lip(*comps);
    if (K != rat_from_json(w.at("lipschitz"))) return false;
  } else {
    return false;
  }
  for (size_t i0 = 0; i0 < pts.size(); ++i0) {
    QuadVal worst(Rat(0));
    for (const Point& x : pts) worst = qv_max(worst, distance(x, pts[i0]));
    if (qv_sign(worst + QuadVal(eps) - QuadVal(delta / K)) > 0) return false;
  }
  return true;
}

bool replay_collective_certified(const NASystem& sys, const json& w) {
  Rat eps = rat_from_json(w.at("eps"));
  Rat delta = rat_from_json(w.at("delta"));
  std::vector<Point> pts;
  for (const json& jp : w.at("points")) pts.push_back(point_from_json(jp));
  const size_t m = pts.size();
  if (m == 0) return false;
  size_t i0 = w.at("i0").get<size_t>();
  long long n = w.at("n").get<long long>();
  if (i0 >= m || n < 1) return false;
  Point y0 = point_from_json(w.at("y0"));
  if (point_eq(pts[i0], y0) || !qv_lt(distance(pts[i0], y0), eps)) return false;

  const json& rows = w.at("rows");
  if (!rows.is_array() || rows.size() != m) return false;
  std::vector<std::optional<Point>> perturb(m);
  for (size_t i = 0; i < m; ++i) {
    const json& row = rows[i];
    if (row.at("i").get<size_t>() != i) return false;
    const std::string mode = row.at("mode").get<std::string>();
    if (mode == "perturb") {
      Point y = point_from_json(row.at("y"));
      if (point_eq(pts[i], y) || !qv_lt(distance(pts[i], y), eps)) return false;
      perturb[i] = y;
    } else if (mode != "anchor") {
      return false;
    }
  }

  std::vector<Point> anchors = pts;
  Point y0n = y0;
  std::vector<std::optional<Point>> pn = perturb;
  for (long long k = 1; k <= n; ++k) {
    const ExactMap f = step_map(sys, k);
    for (Point& x : anchors) x = apply(f, x);
    y0n = apply(f, y0n);
    for (auto& y : pn) {
      if (y) y = apply(f, *y);
    }
  }
  for (size_t i = 0; i < m; ++i) {
    if (pn[i]) {
      if (!qv_gt(distance(*pn[i], anchors[i0]), delta)) return false;
    } else {
      if (!qv_gt(distance(anchors[i], y0n), delta)) return false;
    }
  }
  return true;
}

bool replay_collective(const NASystem& sys, Outcome outcome, const json& w, const json& scale) {
  if (outcome == Outcome::Certified) {
    return w.at("kind").get<std::string>() == "collective" && replay_collective_certified(sys, w);
  }
  long long H = scale.at("horizon").get<long long>();
  return replay_collective_structural(sys, w, H);
}

bool replay_rotation_obstruction(const NASystem& sys, const json& w) {
  if (!sys.period || *sys.period != w.at("period").get<long long>()) return false;
  ExactMap g = period_composition(sys);
  const auto* rot = std::get_if<RotationOffset>(&g.rep);
  if (!rot || rot->q == 0) return false;
  return qv_str(QuadVal(rot->p, rot->q)) == w.at("rotation").get<std::string>();
}

bool replay_dense_periodic(const NASystem& sys, Outcome outcome, const json& w,
                           const json& scale) {
  const std::string kind = w.at("kind").get<std::string>();
  Rat net_eps = rat_from_json(scale.at("net_eps"));
  if (outcome == Outcome::Refuted) {
    if (kind != "no-periodic-point") return false;
    if (w.contains("rotation")) return replay_rotation_obstruction(sys, w);
    // Fixed-set flavor: the exact fixed set of the stable composite misses
    // the named net point by at least net_eps.
    Point x = point_from_json(w.at("x"));
    long long stable = w.at("stable_time").get<long long>();
    if (!sys.identity_from || stable != std::max<long long>(*sys.identity_from - 1, 1))
      return false;
    FixedSet fs = fixed_points(segment_raw(sys, 1, stable));
    if (fs.all) return false;
    for (const Point& p : fs.points) {
      if (qv_lt(distance(x, p), net_eps)) return false;
    }
    if (sys.space.kind == SpaceKind::Interval) {
      const Rat& xv = x.interval();
      for (const auto& [lo, hi] : fs.segments) {
        Rat clamped = std::min(std::max(xv, lo), hi);
        if (abs(xv - clamped) < net_eps) return false;
      }
    }
    return true;
  }
  if (kind != "dense-periodic") return false;
  long long K = scale.at("K").get<long long>();
  std::vector<Point> net = epsilon_net(sys.space, net_eps);
  const json& entries = w.at("entries");
  if (!entries.is_array() || entries.size() != net.size()) return false;
  for (size_t i = 0; i < net.size(); ++i) {
    const json& e = entries[i];
    Point x = point_from_json(e.at("x"));
    Point p = point_from_json(e.at("p"));
    long long n = e.at("n").get<long long>();
    if (!point_eq(x, net[i]) || n < 1) return false;
    if (!point_eq(x, p) && !qv_lt(distance(x, p), net_eps)) return false;
    const std::string cert = e.at("certificate").get<std::string>();
    if (cert == "periodic-point") {
      if (check_periodic_point(sys, p, n, K).outcome != Outcome::Certified) return false;
    } else if (cert == "eventually-identity") {
      if (!sys.identity_from || n != std::max<long long>(*sys.identity_from - 1, 1)) return false;
      if (!point_eq(apply(segment_raw(sys, 1, n), p), p)) return false;
    } else {
      return false;
    }
  }
  return true;
}

bool replay_dense_small_periodic(const NASystem& sys, Outcome outcome, const json& w,
                                 const json& scale) {
  const std::string kind = w.at("kind").get<std::string>();
  if (outcome == Outcome::Refuted) {
    return kind == "no-invariant-set" && replay_rotation_obstruction(sys, w);
  }
  if (kind != "periodic-cover") return false;
  long long K = scale.at("K").get<long long>();
  const json& entries = w.at("entries");
  if (!entries.is_array() || entries.empty()) return false;
  for (const json& e : entries) {
    BasicOpen u = open_from_json(e.at("u"));
    Point x = point_from_json(e.at("x"));
    long long n = e.at("n").get<long long>();
    if (n < 1 || member(x, u) != Tri::True) return false;
    for (long long k = 1; k <= K; ++k) {
      if (!is_identity(segment_raw(sys, 1, n * k))) return false;
    }
  }
  return true;
}

bool replay_minimal(const NASystem& sys, Outcome outcome, const json& w, const json& scale) {
  const std::string kind = w.at("kind").get<std::string>();
  if (outcome == Outcome::Certified) {
    if (kind != "orbit-dense") return false;
    Rat net_eps = rat_from_json(w.at("net_eps"));
    std::vector<Point> net = epsilon_net(sys.space, net_eps);
    const size_t N = net.size();
    const json& entries = w.at("entries");
    if (!entries.is_array() || entries.size() != N) return false;
    for (size_t i = 0; i < N; ++i) {
      const json& e = entries[i];
      Point x = point_from_json(e.at("x"));
      long long ct = e.at("cover_time").get<long long>();
      if (!point_eq(x, net[i]) || ct < 0) return false;
      std::vector<char> covered(N, 0);
      size_t left = N;
      auto touch = [&](const Point& where) {
        for (size_t z = 0; z < N; ++z) {
          if (!covered[z] && qv_sign(distance(where, net[z]) - QuadVal(net_eps)) <= 0) {
            covered[z] = 1;
            --left;
          }
        }
      };
      Point cur = x;
      touch(cur);
      for (long long n = 1; n <= ct && left > 0; ++n) {
        cur = apply(step_map(sys, n), cur);
        touch(cur);
      }
      if (left > 0) return false;
    }
    return true;
  }
  if (kind != "orbit-gap") return false;
  Rat net_eps = rat_from_json(scale.at("net_eps"));
  Point x = point_from_json(w.at("x"));
  Point z = point_from_json(w.at("z"));
  const std::string cert = w.at("certificate").get<std::string>();
  long long window = 0;
  if (cert == "eventually-identity") {
    long long from = w.at("from").get<long long>();
    if (!sys.identity_from || *sys.identity_from != from) return false;
    window = std::max<long long>(from - 1, 1);
  } else if (cert == "periodic-composition") {
    auto comps = detail::finite_composites(sys);
    long long modulus = w.at("modulus").get<long long>();
    if (!comps || static_cast<long long>(comps->size()) != modulus) return false;
    window = modulus;
  } else {
    return false;
  }
  Point cur = x;
  if (!qv_gt(distance(cur, z), net_eps)) return false;
  for (long long n = 1; n <= window; ++n) {
    cur = apply(step_map(sys, n), cur);
    if (!qv_gt(distance(cur, z), net_eps)) return false;
  }
  return true;
}

std::optional<Outcome> outcome_from_str(const std::string& s) {
  if (s == "Certified") return Outcome::Certified;
  if (s == "Refuted") return Outcome::Refuted;
  if (s == "HoldsUpToBound") return Outcome::HoldsUpToBound;
  if (s == "Inconclusive") return Outcome::Inconclusive;
  return std::nullopt;
}

bool replay_devaney(const NASystem& sys, Outcome outcome, const json& w, const json& scale) {
  if (w.at("kind").get<std::string>() != "devaney") return false;
  const json& parts = w.at("parts");
  for (const char* name : {"transitive", "dense-periodic", "sensitive"}) {
    if (!parts.contains(name)) return false;
  }
  for (auto it = parts.begin(); it != parts.end(); ++it) {
    auto po = outcome_from_str(it.value().at("outcome").get<std::string>());
    if (!po) return false;
    if (*po != Outcome::Certified && *po != Outcome::Refuted) continue;
    Verdict part;
    part.outcome = *po;
    part.property = it.key();
    part.witness = it.value().at("witness");
    part.scale = scale;
    if (!replay_witness(sys, part)) return false;
  }
  if (outcome == Outcome::Refuted) {
    const std::string failed = w.at("failed").get<std::string>();
    return parts.contains(failed) &&
           parts.at(failed).at("outcome").get<std::string>() == "Refuted";
  }
  for (auto it = parts.begin(); it != parts.end(); ++it) {
    if (it.value().at("outcome").get<std::string>() != "Certified") return false;
  }
  return true;
}

bool replay_totally_transitive(const NASystem& sys, Outcome outcome, const json& w,
                               const json& scale) {
  const std::string kind = w.at("kind").get<std::string>();
  if (outcome == Outcome::Refuted) {
    if (kind != "iterate-refuted") return false;
    long long k = w.at("k").get<long long>();
    if (k < 1) return false;
    return replay_transitive(kth_iterate_system(sys, k), Outcome::Refuted, w.at("inner"));
  }
  if (kind != "pair-times-per-k") return false;
  long long k_max = scale.at("k_max").get<long long>();
  const json& per_k = w.at("per_k");
  if (!per_k.is_array() || per_k.size() != static_cast<size_t>(k_max)) return false;
  for (size_t idx = 0; idx < per_k.size(); ++idx) {
    const json& e = per_k[idx];
    long long k = e.at("k").get<long long>();
    if (k != static_cast<long long>(idx) + 1) return false;
    if (!replay_transitive(kth_iterate_system(sys, k), Outcome::Certified, e.at("inner")))
      return false;
  }
  return true;
}

}  // namespace

bool replay_witness(const NASystem& sys, const Verdict& v) {
  if (v.outcome != Outcome::Certified && v.outcome != Outcome::Refuted) {
    return true;  // nothing to replay; bounds and open questions carry no witness
  }
  try {
    const json& w = v.witness;
    if (!w.is_object() || !w.contains("kind")) return false;
    const std::string& prop = v.property;
    if (prop == "transitive") return replay_transitive(sys, v.outcome, w);
    if (prop == "totally-transitive")
      return replay_totally_transitive(sys, v.outcome, w, v.scale);
    if (prop == "weak-mixing") return replay_weak_mixing(sys, v.outcome, w);
    if (prop == "banks") return replay_banks(sys, v.outcome, w);
    if (prop == "sensitive") return replay_sensitive(sys, v.outcome, w, v.scale);
    if (variant_from_prop(prop)) return replay_variant(sys, prop, v.outcome, w, v.scale);
    if (prop == "multi-sensitive") return replay_multi(sys, v.outcome, w, v.scale);
    if (prop == "collective-sensitive") return replay_collective(sys, v.outcome, w, v.scale);
    if (prop == "dense-periodic") return replay_dense_periodic(sys, v.outcome, w, v.scale);
    if (prop == "dense-small-periodic")
      return replay_dense_small_periodic(sys, v.outcome, w, v.scale);
    if (prop == "devaney") return replay_devaney(sys, v.outcome, w, v.scale);
    if (prop == "minimal-approx") return replay_minimal(sys, v.outcome, w, v.scale);
    return false;
  } catch (const std::exception&) {
    return false;  // missing or ill-typed witness fields fail the replay
  }
}

bool verify_report(const json& report, std::vector<std::string>* log) {
  auto say = [&](const std::string& line) {
    if (log) log->push_back(line);
  };
  try {
    if (report.value("format", std::string{}) != "nads-report") {
      say("rejected: not a nads-report document");
      return false;
    }
    const json& jf = report.at("fixture");
    Fixture fx = build_fixture(fixture_from_name(jf.at("name").get<std::string>()),
                               jf.value("params", json::object()));
    Verdict v = verdict_from_json(report.at("verdict"));
    if (v.outcome == Outcome::HoldsUpToBound || v.outcome == Outcome::Inconclusive) {
      say(v.property + ": " + outcome_str(v.outcome) + " carries no witness, nothing to replay");
      return true;
    }
    bool ok = replay_witness(fx.system, v);
    say(v.property + ": " + outcome_str(v.outcome) + " witness (" +
        v.witness.value("kind", std::string{"?"}) + ") " +
        (ok ? "replayed" : "FAILED to replay"));
    return ok;
  } catch (const std::exception& e) {
    say(std::string("verification error: ") + e.what());
    return false;
  }
}

std::string fixture_catalog_text() {
  std::ostringstream out;
  for (FixtureId id : fixture_catalog()) {
    Fixture fx = build_fixture(id);
    out << std::left << std::setw(22) << fixture_name(id) << fx.description << "\n";
  }
  return out.str();
}

}  // namespace nads
