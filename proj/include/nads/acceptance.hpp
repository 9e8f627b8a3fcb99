#pragma once

// The acceptance suite: nine end-to-end checks pinning the library's
// headline behaviors with frozen parameters. Shared by the `accept` CLI
// subcommand and the acceptance test binary.

#include <iosfwd>
#include <string>
#include <vector>

namespace nads {

struct AcceptanceResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // one line: the deciding numbers or the failure
};

std::vector<AcceptanceResult> run_acceptance_suite();

// Prints one "PASS/FAIL <n> <title>: <detail>" line per criterion; returns
// true iff all passed.
bool print_acceptance(std::ostream& out);

}  // namespace nads
