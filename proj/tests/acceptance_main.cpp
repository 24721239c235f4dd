// Runs the full verification suite and prints one pass/fail line per
// criterion; exits nonzero when any criterion fails.
#include <cstdio>

#include "varjet/suite.hpp"

int main() {
  bool all_pass = true;
  int index = 0;
  for (const varjet::suite::CheckResult& r : varjet::suite::run_all()) {
    ++index;
    std::printf("%s  %2d  %-22s  [%6.2f s]%s%s%s\n", r.pass ? "PASS" : "FAIL", index,
                r.name.c_str(), r.seconds, r.detail.empty() ? "" : "  (",
                r.detail.c_str(), r.detail.empty() ? "" : ")");
    all_pass &= r.pass;
  }
  return all_pass ? 0 : 1;
}
