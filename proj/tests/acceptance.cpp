// Runs every acceptance check and prints one line per criterion. Exit status
// is nonzero iff a non-stretch check fails or a criterion is missing.

#include <cstdio>
#include <iostream>
#include <string>

#include "lpm/verify/verify.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "--verbose";
  lpm::VerificationSuite suite = lpm::run_verification();
  for (const auto& c : suite.checks) {
    std::string tag = c.status == "pass" ? "PASS" : c.status == "skipped-stretch" ? "SKIP (stretch)" : "FAIL";
    char timing[64];
    if (c.budget > 0) std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", c.seconds, c.budget);
    else std::snprintf(timing, sizeof timing, "%.2f s", c.seconds);
    std::cout << tag << "  " << c.name << "  (" << timing << ")\n";
    if (verbose || c.status == "fail")
      for (const auto& d : c.details) std::cout << "      " << d << "\n";
  }
  const bool complete = suite.checks.size() == 13;
  if (!complete) std::cout << "FAIL  expected 13 criteria, ran " << suite.checks.size() << "\n";
  std::cout << (suite.ok() && complete ? "acceptance: ok" : "acceptance: FAILED") << "\n";
  return suite.ok() && complete ? 0 : 1;
}
