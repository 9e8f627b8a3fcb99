#pragma once

// The fixture catalog: one constructor per studied system, each verified at
// build time against its defining identities. Construction failures are
// fixture bugs and throw logic_error.

#include "nads/system.hpp"

#include <array>
#include <map>

namespace nads {

enum class FixtureId {
  PlInterleaved,      // interleaved PL homeomorphisms f_1, f_1^-1, f_2, f_2^-1, ...
  PlIdentity3,        // blocks (f_k, f_k^-1, id); every third composite is the identity
  PlIdentityPowers10, // blocks (f_k, f_k^-1) separated by 10^k identities; gaps grow fast
  ShiftEven,          // sigma, sigma^-1, sigma^2, sigma^-2, ...; f_1^{2l-1} = sigma^l
  ShiftOddPadded,     // blocks (sigma^r, sigma^-r, k-2 identities) for odd k
  ShiftInterleaved,   // same alternating schedule, studied through its odd hitting sets
  Shift3Periodic,     // period 3: sigma, sigma^-2, sigma^2; composite sigma
  CircleRotations,    // rotation by n*alpha forward at odd steps, undone at even steps
};

std::vector<FixtureId> fixture_catalog();
std::string fixture_name(FixtureId id);
FixtureId fixture_from_name(const std::string& name);

struct Fixture {
  FixtureId id;
  NASystem system;
  std::string description;
  nlohmann::json params;  // the resolved parameter set actually used
};

// params: fixture-specific overrides, all optional.
//   shift-odd-padded: k (odd >= 3, default 3) gives blocks of k maps,
//     (sigma^r, sigma^-r, k-2 identities).
//   pl-identity-powers10: blocks (number of PL pairs before the schedule
//     settles into its identity tail, default 4).
Fixture build_fixture(FixtureId id, const nlohmann::json& params = {});

// Deterministic enumeration of the PL homeomorphism family: quadruples
// (a,b,c,d) of reduced rationals in (0,1) with a < b, a != c, b != d, c != d,
// ordered by increasing sum of denominators, then lexicographically by value.
// c < d gives the increasing map through (0,0),(a,c),(b,d),(1,1); c > d the
// decreasing map through (0,1),(a,c),(b,d),(1,0).
std::vector<ExactMap> enumerate_F(int count);
std::vector<std::array<Rat, 4>> enumerate_F_quadruples(int count);

}  // namespace nads
