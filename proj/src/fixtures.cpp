#include "nads/fixtures.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace nads {

namespace {

struct FixtureInfo {
  FixtureId id;
  const char* name;
  const char* description;
};

const FixtureInfo kCatalog[] = {
    {FixtureId::PlInterleaved, "pl-interleaved",
     "Interval homeomorphisms from the enumerated family, each applied and undone in turn; "
     "two-step composites are the identity while single steps keep changing."},
    {FixtureId::PlIdentity3, "pl-identity-3",
     "Blocks of three interval maps (f_k, its inverse, the identity); every third composite "
     "returns to the identity."},
    {FixtureId::PlIdentityPowers10, "pl-identity-powers10",
     "Pairs (f_k, inverse) separated by 10^k identity steps, then an identity tail; the "
     "non-trivial times thin out fast."},
    {FixtureId::ShiftEven, "shift-even",
     "Alternating shift powers sigma, sigma^-1, sigma^2, sigma^-2, ...; the odd-time "
     "composites realize every power of the shift."},
    {FixtureId::ShiftOddPadded, "shift-odd-padded",
     "Blocks (sigma^r, sigma^-r, identities) of odd length k; composites along multiples "
     "of k are the identity."},
    {FixtureId::ShiftInterleaved, "shift-interleaved",
     "The alternating shift-power schedule viewed through its hitting sets, which live on "
     "the odd integers."},
    {FixtureId::Shift3Periodic, "shift-3periodic",
     "Period-three schedule sigma, sigma^-2, sigma^2 whose period composition is the "
     "plain shift."},
    {FixtureId::CircleRotations, "circle-rotations",
     "Rotation by n*alpha at the n-th odd step, undone at the following even step; every "
     "map is an isometry."},
};

ExactMap quadruple_map(const std::array<Rat, 4>& q) {
  const auto& [a, b, c, d] = q;
  if (c < d)
    return interval_map({{Rat(0), Rat(0)}, {a, c}, {b, d}, {Rat(1), Rat(1)}});
  return interval_map({{Rat(0), Rat(1)}, {a, c}, {b, d}, {Rat(1), Rat(0)}});
}

// Shared cache so a fixture rule can reach family members beyond what was
// prepared at build time; the enumeration is prefix-stable, so regrowing the
// vector never changes existing entries.
struct FamilyCache {
  std::vector<ExactMap> maps;
  std::vector<ExactMap> inverses;

  const ExactMap& at(long long l, bool inv) {
    if (l < 1) throw std::logic_error("family index must be >= 1");
    if (l > static_cast<long long>(maps.size())) {
      long long want = std::max<long long>(l, 2 * static_cast<long long>(maps.size()));
      maps = enumerate_F(static_cast<int>(want));
      inverses.clear();
      inverses.reserve(maps.size());
      for (const ExactMap& f : maps) inverses.push_back(inverse(f));
    }
    return inv ? inverses[static_cast<size_t>(l - 1)] : maps[static_cast<size_t>(l - 1)];
  }
};

long long require_int_param(const nlohmann::json& params, const char* key, long long fallback) {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("fixture param '") + key +
                                                          "' must be an integer");
  return v.get<long long>();
}

void reject_unknown_params(const nlohmann::json& params, std::initializer_list<const char*> known) {
  if (params.is_null()) return;
  if (!params.is_object()) throw std::invalid_argument("fixture params must be a JSON object");
  for (const auto& item : params.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) throw std::invalid_argument("unknown fixture param '" + item.key() + "'");
  }
}

// Build-time self-checks: the composite over each listed window must be the
// identity, and the rule must produce the expected map at each listed time.
void verify_fixture(const NASystem& sys, const std::vector<std::pair<long long, long long>>& ids,
                    const std::vector<std::pair<long long, ExactMap>>& steps) {
  for (const auto& [s, len] : ids) {
    if (!is_identity(segment_raw(sys, s, len)))
      throw std::logic_error(sys.name + ": composite over [" + std::to_string(s) + ", " +
                             std::to_string(s + len - 1) + "] is not the identity");
  }
  for (const auto& [n, expected] : steps) {
    if (!maps_equal(sys.rule(n), expected))
      throw std::logic_error(sys.name + ": unexpected map at time " + std::to_string(n));
  }
}

}  // namespace

std::vector<FixtureId> fixture_catalog() {
  std::vector<FixtureId> out;
  for (const auto& info : kCatalog) out.push_back(info.id);
  return out;
}

std::string fixture_name(FixtureId id) {
  for (const auto& info : kCatalog)
    if (info.id == id) return info.name;
  throw std::logic_error("unknown fixture id");
}

FixtureId fixture_from_name(const std::string& name) {
  for (const auto& info : kCatalog)
    if (name == info.name) return info.id;
  throw std::invalid_argument("unknown fixture name: " + name);
}

std::vector<std::array<Rat, 4>> enumerate_F_quadruples(int count) {
  if (count < 0) throw std::invalid_argument("enumerate_F_quadruples: count must be >= 0");
  std::vector<std::array<Rat, 4>> out;
  auto fractions_of_denominator = [](long long den) {
    std::vector<Rat> out;
    for (long long num = 1; num < den; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
    return out;
  };
  for (long long S = 8; static_cast<int>(out.size()) < count; ++S) {
    if (S > 10000) throw std::logic_error("enumerate_F_quadruples: runaway enumeration");
    std::vector<std::array<Rat, 4>> batch;
    for (long long da = 2; da <= S - 6; ++da)
      for (long long db = 2; db <= S - da - 4; ++db)
        for (long long dc = 2; dc <= S - da - db - 2; ++dc) {
          long long dd = S - da - db - dc;
          for (const Rat& a : fractions_of_denominator(da))
            for (const Rat& b : fractions_of_denominator(db)) {
              if (!(a < b)) continue;
              for (const Rat& c : fractions_of_denominator(dc)) {
                if (a == c) continue;
                for (const Rat& d : fractions_of_denominator(dd)) {
                  if (b == d || c == d) continue;
                  batch.push_back({a, b, c, d});
                }
              }
            }
        }
    std::sort(batch.begin(), batch.end());
    out.insert(out.end(), batch.begin(), batch.end());
  }
  out.resize(static_cast<size_t>(count));
  return out;
}

std::vector<ExactMap> enumerate_F(int count) {
  std::vector<ExactMap> out;
  for (const auto& q : enumerate_F_quadruples(count)) out.push_back(quadruple_map(q));
  return out;
}

Fixture build_fixture(FixtureId id, const nlohmann::json& params) {
  const SpaceId interval{SpaceKind::Interval, 1};
  const SpaceId shift{SpaceKind::Shift, 1};
  const SpaceId circle{SpaceKind::Circle, 1};
  Fixture fx;
  fx.id = id;
  fx.params = nlohmann::json::object();

  switch (id) {
    case FixtureId::PlInterleaved: {
      reject_unknown_params(params, {});
      auto cache = std::make_shared<FamilyCache>();
      cache->at(8, false);  // warm the prefix most scans touch
      NASystem sys;
      sys.space = interval;
      sys.name = fixture_name(id);
      sys.rule = [cache](long long n) {
        return cache->at((n + 1) / 2, n % 2 == 0);
      };
      sys.identity_cycle = 2;
      fx.system = std::move(sys);
      verify_fixture(fx.system, {{1, 2}, {1, 4}, {1, 8}, {3, 2}},
                     {{1, enumerate_F(1)[0]}, {3, enumerate_F(2)[1]}});
      break;
    }
    case FixtureId::PlIdentity3: {
      reject_unknown_params(params, {});
      auto cache = std::make_shared<FamilyCache>();
      cache->at(8, false);
      NASystem sys;
      sys.space = interval;
      sys.name = fixture_name(id);
      sys.rule = [cache, interval](long long n) {
        long long pos = (n - 1) % 3;
        if (pos == 2) return identity_map(interval);
        return cache->at((n - 1) / 3 + 1, pos == 1);
      };
      sys.identity_cycle = 3;
      fx.system = std::move(sys);
      verify_fixture(fx.system, {{1, 3}, {1, 9}, {4, 3}},
                     {{1, enumerate_F(1)[0]}, {3, identity_map(interval)},
                      {4, enumerate_F(2)[1]}});
      break;
    }
    case FixtureId::PlIdentityPowers10: {
      reject_unknown_params(params, {"blocks"});
      long long blocks = require_int_param(params, "blocks", 4);
      if (blocks < 1 || blocks > 8)
        throw std::invalid_argument("pl-identity-powers10: blocks must lie in [1, 8]");
      fx.params["blocks"] = blocks;
      // Block j contributes (f_j, f_j^-1, 10^j identities); starts[j-1] is the
      // time of f_j and tail is the first time of the closing identity run.
      std::vector<long long> starts;
      long long pos = 1, pow10 = 10;
      for (long long j = 1; j <= blocks; ++j) {
        starts.push_back(pos);
        pos += 2 + pow10;
        pow10 *= 10;
      }
      long long tail = starts.back() + 2;
      auto cache = std::make_shared<FamilyCache>();
      cache->at(blocks, false);
      NASystem sys;
      sys.space = interval;
      sys.name = fixture_name(id);
      auto starts_ptr = std::make_shared<std::vector<long long>>(std::move(starts));
      sys.rule = [cache, starts_ptr, interval](long long n) {
        for (size_t j = 0; j < starts_ptr->size(); ++j) {
          if (n == (*starts_ptr)[j]) return cache->at(static_cast<long long>(j) + 1, false);
          if (n == (*starts_ptr)[j] + 1) return cache->at(static_cast<long long>(j) + 1, true);
        }
        return identity_map(interval);
      };
      sys.identity_from = tail;
      fx.system = std::move(sys);
      std::vector<std::pair<long long, long long>> ids{{1, 2}, {1, 12}};
      std::vector<std::pair<long long, ExactMap>> steps{{1, enumerate_F(1)[0]},
                                                        {3, identity_map(interval)}};
      if (blocks >= 2) {
        ids.push_back({1, 14});
        steps.push_back({13, enumerate_F(2)[1]});
      }
      verify_fixture(fx.system, ids, steps);
      break;
    }
    case FixtureId::ShiftEven:
    case FixtureId::ShiftInterleaved: {
      reject_unknown_params(params, {});
      NASystem sys;
      sys.space = shift;
      sys.name = fixture_name(id);
      sys.rule = [](long long n) {
        return n % 2 ? shift_map((n + 1) / 2) : shift_map(-(n / 2));
      };
      sys.identity_cycle = 2;
      fx.system = std::move(sys);
      verify_fixture(fx.system, {{1, 2}, {1, 6}, {3, 2}},
                     {{1, shift_map(1)}, {2, shift_map(-1)}, {7, shift_map(4)}});
      break;
    }
    case FixtureId::ShiftOddPadded: {
      reject_unknown_params(params, {"k"});
      long long k = require_int_param(params, "k", 3);
      if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("shift-odd-padded: k must be odd and >= 3");
      fx.params["k"] = k;
      NASystem sys;
      sys.space = shift;
      sys.name = fixture_name(id);
      sys.rule = [k, shift](long long n) {
        long long block = (n - 1) / k + 1, pos = (n - 1) % k;
        if (pos == 0) return shift_map(block);
        if (pos == 1) return shift_map(-block);
        return identity_map(shift);
      };
      sys.identity_cycle = k;
      fx.system = std::move(sys);
      verify_fixture(fx.system, {{1, k}, {1, 3 * k}, {k + 1, k}},
                     {{1, shift_map(1)}, {2, shift_map(-1)}, {k + 1, shift_map(2)},
                      {k, identity_map(shift)}});
      break;
    }
    case FixtureId::Shift3Periodic: {
      reject_unknown_params(params, {});
      fx.system = periodic_system({shift_map(1), shift_map(-2), shift_map(2)}, fixture_name(id));
      verify_fixture(fx.system, {}, {{1, shift_map(1)}, {2, shift_map(-2)}, {4, shift_map(1)}});
      if (!maps_equal(period_composition(fx.system), shift_map(1)))
        throw std::logic_error("shift-3periodic: period composition is not the shift");
      break;
    }
    case FixtureId::CircleRotations: {
      reject_unknown_params(params, {});
      NASystem sys;
      sys.space = circle;
      sys.name = fixture_name(id);
      sys.rule = [](long long n) {
        return n % 2 ? circle_map(Rat(0), (n + 1) / 2) : circle_map(Rat(0), -(n / 2));
      };
      sys.identity_cycle = 2;
      sys.all_isometries = true;
      fx.system = std::move(sys);
      verify_fixture(fx.system, {{1, 2}, {1, 8}, {5, 2}},
                     {{1, circle_map(Rat(0), 1)}, {4, circle_map(Rat(0), -2)},
                      {9, circle_map(Rat(0), 5)}});
      break;
    }
  }
  fx.description = [&] {
    for (const auto& info : kCatalog)
      if (info.id == id) return std::string(info.description);
    return std::string();
  }();
  return fx;
}

}  // namespace nads
