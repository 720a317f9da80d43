#pragma once

#include <string>
#include <vector>

namespace gg {

struct CheckEntry {
  std::string id;
  std::string anchor;    // the identity or property the check verifies
  std::string status;    // pass | fail | not-applicable
  std::string residual;  // exact serialized residual, empty when trivial
  double seconds = -1;   // wall time; serialized only on request

  friend bool operator==(const CheckEntry& a, const CheckEntry& b) {
    return a.id == b.id && a.anchor == b.anchor && a.status == b.status &&
           a.residual == b.residual;
  }
};

struct Report {
  std::string scenario;
  std::vector<CheckEntry> entries;

  bool overall() const {
    for (const auto& e : entries)
      if (e.status == "fail") return false;
    return true;
  }

  /// Deterministic plain-text rendering; timings are omitted by default so
  /// identical (scenario, seed) pairs produce byte-identical output.
  std::string text(bool timing = false) const;
  std::string json(bool timing = false) const;

  friend bool operator==(const Report& a, const Report& b) {
    return a.scenario == b.scenario && a.entries == b.entries;
  }
};

/// Inverse of Report::json for round-trip testing.
Report parse_report_json(const std::string& src);

}  // namespace gg
