#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cevian::verify {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  /// Worst observed residual and what it was compared against.
  std::string detail;
  double seconds;
  double time_limit;
};

enum class Suite { Routh, Napoleon, Identities, Torus, Area, Orbits, All };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite s);

/// Criterion ids belonging to a suite, in run order.
std::vector<int> suite_criteria(Suite s);

/// Runs one acceptance criterion (1..11). A criterion fails if any check
/// misses its tolerance or it overruns its time budget.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_suite(Suite s);

/// "PASS [ 1] routh-one-seventh ... (0.002 s / 1 s) worst rel err 1.1e-16 ≤ 1e-12"
std::string format_result(const CriterionResult& r);

}  // namespace cevian::verify
