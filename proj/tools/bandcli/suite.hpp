#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bandcli {

enum class CaseOutcome { pass, fail, unknown };

std::string_view to_string(CaseOutcome outcome);

// One checked claim. `source` names the published result or the oracle the
// expected value comes from.
struct SuiteCase {
  std::string id;
  std::string claim;
  std::string source;
  std::string expected;
  std::string actual;
  CaseOutcome outcome = CaseOutcome::unknown;
};

struct SuiteOptions {
  int max_n = 4;
  std::uint64_t budget_nodes = 10'000'000;  // per solver call
};

// Cases in a fixed order; deterministic for fixed options.
std::vector<SuiteCase> run_suite(const SuiteOptions& options);

std::string format_case(const SuiteCase& c);

}  // namespace bandcli
