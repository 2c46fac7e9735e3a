// Runs every acceptance criterion through the verification suites and prints
// one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <cstdio>
#include <map>
#include <string>

#include "gc1p/verify.hpp"

namespace {

const std::map<int, const char*> kCriteria{
    {1, "gadget row-count identity, delta in {1,2,3}, n in [2delta+3, 14] (< 1 s)"},
    {2, "gadget rigidity, valid_count = 2 (<= 10 s each)"},
    {3, "embedded rigidity, 5 of 7 columns (<= 30 s)"},
    {4, "decide agrees with brute force on the random corpus (<= 2 min)"},
    {5, "classic C1P agrees with decide (1,0); triple rejected (<= 10 s)"},
    {6, "(k,1) reduction equivalence, 12 and 16 columns (<= 10 min)"},
    {7, "(k,delta) reduction, 14 columns; 19-column stretch (<= 10 / 60 min)"},
    {8, "repairs ledger covers the shipped variant"},
    {9, "(k,0) collapse and reversal invariance (<= 30 s)"},
};

}  // namespace

int main() {
  gc1p::SuiteOptions options;
  const auto reports = gc1p::run_suites("all", options);

  bool all_passed = true;
  for (const auto& [id, title] : kCriteria) {
    int cases = 0, skipped = 0;
    bool passed = true;
    double seconds = 0;
    std::string failures;
    for (const auto& report : reports)
      for (const auto& c : report.cases) {
        if (c.criterion != id) continue;
        ++cases;
        seconds += c.seconds;
        if (c.skipped) {
          ++skipped;
        } else if (!c.passed) {
          passed = false;
          failures += "\n      " + c.name + ": " + c.detail;
        }
      }
    passed = passed && cases > 0;
    all_passed = all_passed && passed;
    std::printf("criterion %d: %s  %s [%d case%s%s, %.3f s]%s\n", id, passed ? "PASS" : "FAIL",
                title, cases, cases == 1 ? "" : "s",
                skipped ? (", " + std::to_string(skipped) + " skipped").c_str() : "", seconds,
                failures.c_str());
  }

  for (const auto& report : reports)
    for (const auto& c : report.cases)
      if (c.criterion && !c.detail.empty())
        std::printf("  [%d] %s: %s\n", c.criterion, c.name.c_str(), c.detail.c_str());
  return all_passed ? 0 : 1;
}
