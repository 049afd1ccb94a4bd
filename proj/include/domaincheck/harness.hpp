#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "domaincheck/parallel.hpp"

namespace domaincheck {

struct Failure {
  std::string suite;
  std::string case_id;
  std::string check;
  nlohmann::json witness;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct SuiteSummary {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;

  friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

/// Outcome of one suite. Failing checks keep their first few witnesses per
/// poset; `cases - passed` counts all of them.
struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::vector<std::string> notes;
  /// Filled by "all" only.
  std::vector<SuiteSummary> suites;
  std::vector<std::string> missing_operations;

  bool ok() const { return cases == passed; }
};

struct SuiteParams {
  std::size_t max_size = 5;
  std::uint64_t seed = 0;
  /// Sampled (net, point, ideal) triples per poset.
  std::size_t samples = 1000;
  Exec exec = Exec::Parallel;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Public operations that "all" must reach at least once.
const std::vector<std::string>& checked_operations();

/// Throws Error{UnknownSuite}.
SuiteReport run_suite(std::string_view name, const SuiteParams& params);

/// Stable schema, no timing: {"suite","cases","passed","failures","seed"}
/// plus "notes", and "suites"/"coverage" for "all".
nlohmann::json report_to_json(const SuiteReport& r);
SuiteReport report_from_json(const nlohmann::json& j);

/// Human summary with wall time; failure witnesses are written as one JSON
/// object per line so the text form parses back.
std::string report_to_text(const SuiteReport& r);
SuiteReport report_from_text(std::string_view text);

}  // namespace domaincheck
