#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace vcli {

struct UnknownSuite : std::invalid_argument {
  explicit UnknownSuite(const std::string& name)
      : std::invalid_argument("unknown suite: " + name) {}
};

struct BadParameters : std::invalid_argument {
  explicit BadParameters(const std::string& what) : std::invalid_argument(what) {}
};

enum class CaseStatus { kPass, kFail, kReport };

const char* status_name(CaseStatus s);

struct CaseRecord {
  std::string case_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CaseStatus status = CaseStatus::kFail;
  std::string expected;
  std::string observed;
  int64_t elapsed_ms = 0;
};

// Narrowing knobs shared by every suite.  An unset field means "the suite's
// default range"; a set field restricts runs to that single value and is
// rejected with BadParameters when the suite cannot honor it.
struct SuiteParams {
  std::optional<int64_t> p;          // characteristic of the coefficient field
  std::optional<int64_t> ell;        // torsion level l
  std::optional<int64_t> level_cap;  // upper bound for residue levels N
  std::optional<int> instances;      // randomized instances per property case
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CaseRecord> cases;

  size_t count(CaseStatus s) const;
  // No failing cases.  "report" cases never gate: they carry expected and
  // observed values for claims this artifact surveys rather than asserts.
  bool all_passed() const;
};

inline constexpr char kArtifactVersion[] = "1.0.0";

const std::vector<std::string>& suite_names();

// Deterministic for fixed (name, params, seed): per-case generators are
// derived from the master seed and the case id, never from global state.
SuiteReport run_suite(const std::string& name, const SuiteParams& params,
                      uint64_t seed);

// format "json": the stable schema documented in the README; format "text":
// one aligned row per case plus a status tally.
std::string emit_report(const SuiteReport& r, const std::string& format);

nlohmann::ordered_json report_json(const SuiteReport& r);

}  // namespace vcli
