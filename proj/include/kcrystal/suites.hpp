#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kcrystal/permutation.hpp"

namespace kcrystal {

struct Bounds {
  int max_n = 4;
  int max_side = 3;
  int max_cells = 6;
  int max_degree = 4;
  /// Restricts shape-driven suites to one partition / one n.
  std::optional<WeakComposition> shape;
  std::optional<int> n;
};

enum class Status { kPass, kFail, kReport };

std::string to_string(Status s);

struct SuiteResult {
  std::string suite;
  std::string case_name;
  Status status = Status::kPass;
  /// Set for failures and reports.
  std::string witness;
  double elapsed_ms = 0;
};

struct CaseOutcome {
  Status status = Status::kPass;
  std::string witness;

  static CaseOutcome pass() { return {}; }
  static CaseOutcome fail(std::string why) { return {Status::kFail, std::move(why)}; }
  static CaseOutcome report(std::string what) { return {Status::kReport, std::move(what)}; }
};

struct SuiteCase {
  std::string name;
  std::function<CaseOutcome()> run;
};

std::vector<std::string> suite_names();

/// Cases of a suite under the bounds. Throws std::invalid_argument for an
/// unknown suite.
std::vector<SuiteCase> suite_cases(const std::string& suite, const Bounds& bounds);

/// Runs the cases on a pool of workers; results come back in case order.
/// An exception escaping a case becomes a failure carrying its message.
std::vector<SuiteResult> run_cases(const std::string& suite, const std::vector<SuiteCase>& cases, int workers);

std::vector<SuiteResult> run_suite(const std::string& suite, const Bounds& bounds, int workers);

/// KCRYSTAL_WORKERS if set and positive, else the hardware concurrency.
int default_workers();

}  // namespace kcrystal
