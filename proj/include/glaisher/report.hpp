#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glaisher/cxmath.hpp"

namespace glaisher {

// One identity check: parameters, both sides, error, verdict.
struct VerificationReport {
  std::string family;
  std::optional<int> n;
  std::optional<double> a;
  std::optional<int> k;
  Cx lhs{0.0, 0.0};
  Cx rhs{0.0, 0.0};
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  long evaluations = 0;
  double runtime_ms = 0.0;
  std::vector<std::string> notes;
};

// 17 significant digits, round-trip safe.
std::string fmt17(double v);

std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);
std::string report_csv_header();
std::string report_to_csv(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

// Stable output order for sweeps: (family, n, a, k).
void sort_reports(std::vector<VerificationReport>& rs);

}  // namespace glaisher
