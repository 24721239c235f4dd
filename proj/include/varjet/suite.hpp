#pragma once

#include <string>
#include <vector>

namespace varjet {
namespace suite {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The built-in verification suite: worked-example reproductions plus the
// randomized property checks. Every fixture is embedded; a clean build runs
// it without external files.
std::vector<CheckResult> run_all();

// Documented sources for the three running-example functionals.
extern const char* const kSourceF;
extern const char* const kSourceG;
extern const char* const kSourceH;

}  // namespace suite
}  // namespace varjet
