// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <exception>

#include "posettop/checks.hpp"

int main() {
  using namespace posettop::checks;
  Options options;
  int failures = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run_criterion(id, options);
    } catch (const std::exception& e) {
      std::printf("criterion %2d: FAIL %s (exception: %s)\n", id, criterion_title(id).c_str(), e.what());
      ++failures;
      continue;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.passed();
    if (!ok) ++failures;
    std::printf("criterion %2d: %s %s (%zu/%zu cases, %.2fs)\n", id, ok ? "PASS" : "FAIL", r.title.c_str(),
                r.ran() - r.failed(), r.ran(), secs);
    for (const auto& c : r.cases)
      if (!c.skipped && !c.ok)
        std::printf("    %s: %s\n      repro: %s\n", c.name.c_str(), c.detail.c_str(), c.repro.c_str());
  }
  std::printf("%d/%d criteria passed\n", kCriterionCount - failures, kCriterionCount);
  return failures == 0 ? 0 : 1;
}
