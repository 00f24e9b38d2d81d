// Acceptance suite: runs every verification check at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 only when all
// criteria hold.

#include <chrono>
#include <cstdio>
#include <string>

#include "solang/verify.hpp"

int main() {
  using namespace solang;
  EnginePolicy policy;  // defaults: exact engines below dim 4, 1e6 MC samples, seed 0

  auto start = std::chrono::steady_clock::now();
  VerifySuite suite = run_verification(policy, nullptr);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int width = 0;
  for (const auto& r : suite.results) width = std::max(width, static_cast<int>(r.id.size()));
  int num = 1;
  for (const auto& r : suite.results) {
    std::printf("criterion %2d  %-*s  %s  [%6.2fs]  %s\n", num++, width, r.id.c_str(),
                r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
  }
  std::printf("total: %.1fs, %zu/%zu criteria pass\n", total,
              static_cast<size_t>(
                  std::count_if(suite.results.begin(), suite.results.end(),
                                [](const CheckResult& r) { return r.pass; })),
              suite.results.size());
  return suite.all_pass() ? 0 : 1;
}
