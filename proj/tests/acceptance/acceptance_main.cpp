// Acceptance runner: executes the full verification suite and prints one
// PASS/FAIL line per criterion. Exit status 0 iff everything passed.

#include <chrono>
#include <cstdio>

#include "topocryst/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  std::vector<topocryst::CriterionResult> results = topocryst::run_acceptance_suite();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s  %2d  %s%s%s\n", r.pass ? "PASS" : "FAIL", r.index,
                r.name.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    if (!r.pass) ++failures;
  }
  double seconds =
      std::chrono::duration<double>(clock::now() - started).count();
  std::printf("%d/%zu criteria passed in %.1fs\n",
              static_cast<int>(results.size()) - failures, results.size(),
              seconds);
  return failures == 0 ? 0 : 1;
}
