#pragma once

#include <string>
#include <vector>

#include "glaisher/quad.hpp"
#include "glaisher/report.hpp"

namespace glaisher {

struct CriterionResult {
  int id = 0;
  std::string label;
  bool gating = true;
  bool pass = false;
  double runtime_ms = 0.0;
  std::vector<VerificationReport> reports;
  std::vector<std::string> details;  // failures and noteworthy sub-results
};

// Number of worker threads: GLAISHER_LAB_THREADS when set (positive),
// otherwise the hardware concurrency.
int worker_threads();

// Runs the verification battery: theorem sweeps, partial-fraction
// reassembly and root certification, residue route agreement, finite sums,
// symmetry checks, the classical semi-infinite integrals, and (optionally)
// the exploratory items. Pass/fail thresholds are fixed here.
std::vector<CriterionResult> run_acceptance_criteria(const QuadConfig& cfg,
                                                     bool include_exploratory);

}  // namespace glaisher
