#pragma once

#include "liefusion/cache.hpp"

#include <string>
#include <vector>

namespace liefusion {

enum class CheckStatus { Pass, Fail, PaperDiscrepancy };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string anchor;       // section/appendix of the companion article
  std::string description;
  CheckStatus status = CheckStatus::Fail;
  std::string expected;
  std::string computed;
  double ms = 0.0;
};

struct VerifyOptions {
  std::int64_t scan_max = 2;  // Dynkin-label bound for the Eq.(2) scan box
  std::string only;           // run only checks whose id matches (loose match)
  CacheConfig cache{false, {}};
};

struct CheckReport {
  std::vector<CheckResult> checks;
  // Overall pass iff no check failed; discrepancy findings do not fail.
  bool pass() const;
};

CheckReport run_verify_paper(const VerifyOptions& opts = {});

std::string render_report_table(const CheckReport& report);
std::string report_to_json(const CheckReport& report);

}  // namespace liefusion
