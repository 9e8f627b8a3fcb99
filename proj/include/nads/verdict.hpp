#pragma once

// Verdicts produced by the property checkers. Certified and Refuted always
// carry a witness that can be replayed against the lower modules (see
// report.hpp); Inconclusive and HoldsUpToBound carry the exhausted scale
// (horizon, net mesh, seed identity) instead.

#include <json.hpp>

#include <string>

namespace nads {

enum class Outcome { Certified, Refuted, HoldsUpToBound, Inconclusive };

inline std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "Certified";
    case Outcome::Refuted: return "Refuted";
    case Outcome::HoldsUpToBound: return "HoldsUpToBound";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::string property;     // checker name, e.g. "transitive"
  nlohmann::json witness;   // structured evidence, empty for Inconclusive
  nlohmann::json scale;     // horizon, mesh, params actually used
  std::string note;         // one-line human summary
};

inline Verdict make_verdict(Outcome o, std::string property, nlohmann::json witness,
                            nlohmann::json scale, std::string note) {
  Verdict v;
  v.outcome = o;
  v.property = std::move(property);
  v.witness = std::move(witness);
  v.scale = std::move(scale);
  v.note = std::move(note);
  return v;
}

}  // namespace nads
