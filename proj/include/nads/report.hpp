#pragma once

// Report assembly, witness replay, and the analysis front end shared by the
// CLI and the tests. Reports are deterministic for identical configs and
// every Certified/Refuted witness can be replayed against the lower modules.

#include "nads/checkers.hpp"
#include "nads/fixtures.hpp"
#include "nads/serialize.hpp"

namespace nads {

struct AnalysisConfig {
  std::string fixture;                 // fixture id name
  nlohmann::json fixture_params;       // forwarded to build_fixture
  std::string property;                // checker name, see property_catalog()
  nlohmann::json property_params;      // checker-specific parameters
};

// Supported property names with one-line descriptions.
std::vector<std::pair<std::string, std::string>> property_catalog();

// Runs the named checker on the named fixture. Throws std::invalid_argument
// for unknown names or bad parameters.
nlohmann::json run_analysis(const AnalysisConfig& config);

// Replays the witnesses inside a report produced by run_analysis. Returns
// false when any piece of evidence fails to reproduce. Appends one line per
// checked witness to log when given.
bool verify_report(const nlohmann::json& report, std::vector<std::string>* log = nullptr);

// Replays one verdict's witness for the given system. Exposed for tests.
bool replay_witness(const NASystem& sys, const Verdict& v);

// Human-readable fixture catalog.
std::string fixture_catalog_text();

}  // namespace nads
