#pragma once
// Verification suites shared by the command-line tool, the acceptance
// runner and the Python module. Records come out in a fixed order so two
// runs with the same configuration give identical reports.
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>
#include "laumon/characters.hpp"
#include "laumon/report.hpp"

namespace laumon {

struct SuiteConfig {
  int n = 2;
  int box = 2;
  std::uint64_t seed = 1;
  int trials = 5;
  Orientation orientation = Orientation::A;
  /// Restricts index-dependent suites (mrak) to one simple root.
  std::optional<int> i;
  Json to_json() const;
};

/// Wall-clock limit checked between units of work.
class Budget {
 public:
  Budget() = default;
  explicit Budget(double seconds);
  /// Reads LAUMON_TIME_BUDGET (seconds); unlimited when unset or empty.
  static Budget from_env();
  bool exhausted() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct SuiteReport {
  std::vector<CheckRecord> records;
  /// Non-check payload lines (calibration verdicts, listings).
  std::vector<Json> data;
  bool out_of_budget = false;
  Tally tally() const;
};

const std::vector<std::string>& suite_names();
/// Runs one named suite ("full" runs all of them in order). Throws
/// UsageError for an unknown name or bad configuration.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg,
                      const Budget& budget = Budget());

}  // namespace laumon
