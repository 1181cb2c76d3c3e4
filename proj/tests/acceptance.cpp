// One line per acceptance criterion at the default bounds; nonzero exit if any fails.
#include <chrono>
#include <cstdio>

#include "injres/commands.hpp"
#include "injres/errors.hpp"

int main() {
  const injres::RunConfig config;
  int failed = 0;
  for (const injres::Criterion& c : injres::acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    injres::Report r;
    std::string error;
    try {
      r = injres::run_criterion(c.id, config);
    } catch (const injres::Error& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && r.ok();
    failed += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s  (%.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), secs);
    if (!error.empty()) std::printf("    raised %s\n", error.c_str());
    for (const injres::ReportCheck& check : r.checks)
      if (!check.passed) std::printf("    failed: %s\n", check.name.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(injres::acceptance_criteria().size()) - failed,
              injres::acceptance_criteria().size());
  return failed == 0 ? 0 : 1;
}
