#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitlab/catalog.hpp"
#include "unitlab/recognizer.hpp"

namespace unitlab {

struct CheckConfig {
  std::optional<int> p_filter;  // restrict to one catalog prime
  uint64_t seed = 1;
  int samples = 200;
  int cap = kDefaultOrderCap;
};

enum class CheckStatus { Pass, Fail, Skipped };

// One line of the verification report. Identical inputs and seeds produce
// byte-identical reports; lines are emitted in canonical order (check id in
// registry order, then catalog order) regardless of execution order.
struct VerificationReport {
  std::string check;
  std::string group;
  CheckStatus status = CheckStatus::Skipped;
  uint64_t seed = 0;
  int samples = 0;
  std::string detail;
};

struct CheckInfo {
  const char* id;
  const char* operations;  // library operations the check drives
};

const std::vector<CheckInfo>& check_registry();
bool known_check(const std::string& id);

// Runs the selected checks (or all of them) against the applicable catalog
// groups. Groups failing a check's preconditions yield a skipped-precondition
// line, never a silent pass. Throws PreconditionError for unknown check ids.
std::vector<VerificationReport> run_checks(const std::vector<std::string>& selection,
                                           const CheckConfig& config);

std::string render_report_line(const VerificationReport& r);
// All lines plus the trailing summary line.
std::string render_report(const std::vector<VerificationReport>& reports);

// 0 when nothing failed, 1 otherwise; skipped lines do not affect it.
int report_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace unitlab
