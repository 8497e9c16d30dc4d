#ifndef QPOCH_TOOLS_VERIFY_HPP
#define QPOCH_TOOLS_VERIFY_HPP

#include <string>
#include <vector>

#include "qpoch/classify.hpp"
#include "qpoch/oracle.hpp"

namespace qpoch::tools {

enum class Status { pass, fail, info };

struct CheckResult {
  std::string name;
  Status status;
  std::string detail;
};

struct VerifyConfig {
  OracleBudget oracle{};
  SweepOptions sweep{};
};

struct SuiteResult {
  std::vector<CheckResult> checks;
  std::string report;  // free text appended after the checks (conjecture scan)

  bool all_pass() const;
};

SuiteResult verify_identities(const VerifyConfig& cfg);
SuiteResult verify_oracle(const VerifyConfig& cfg);
SuiteResult verify_corrections(const VerifyConfig& cfg);
SuiteResult verify_windows(const VerifyConfig& cfg);
SuiteResult verify_conjecture(std::uint64_t h_max, const VerifyConfig& cfg);

const char* to_string(Status s);

}  // namespace qpoch::tools

#endif  // QPOCH_TOOLS_VERIFY_HPP
