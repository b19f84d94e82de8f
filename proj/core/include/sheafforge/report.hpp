#pragma once

#include <string>
#include <vector>

#include "sheafforge/module.hpp"

namespace sheafforge {

enum class CheckStatus { kPass, kFail, kInconclusive };
std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string id;      // stable slug, e.g. rem-4.2-chain
  std::string anchor;  // location string the check reproduces
  CheckStatus status = CheckStatus::kInconclusive;
  std::string detail;
  double millis = 0;
};

struct Report {
  std::string command;
  std::vector<CheckRecord> checks;
  double total_millis = 0;

  bool ok() const;  // no FAIL
  /// 0 when no check failed, 1 otherwise.
  int exit_code() const;
  std::size_t count(CheckStatus s) const;
};

inline constexpr int kReportSchemaVersion = 1;

/// JSON with a fixed field order. With `scrub_timing` all timings are 0, so
/// two runs compare byte for byte.
std::string report_json(const Report& r, bool scrub_timing = false);
std::string report_markdown(const Report& r);

/// The ClassifyReport fields under their own names, plus schema_version.
std::string classify_json(const ClassifyReport& c);
std::string classify_text(const ClassifyReport& c);

}  // namespace sheafforge
