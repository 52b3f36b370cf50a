#pragma once

#include <functional>

#include "glaisher/cxmath.hpp"

namespace glaisher {

enum class QuadScheme { SubstGauss, DoubleExp };

// Whether the 1/sqrt(1-t^2) endpoint weight is factored out of the caller's
// integrand (InvSqrt1mT2) or supplied inside it (None). Both modes run
// through the t = sin(theta) substitution, which absorbs the weight into the
// Jacobian; removable singularities at t = 0 must be resolved by the caller.
enum class WeightMode { InvSqrt1mT2, None };

struct QuadConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_levels = 12;
  long max_evals = 2000000;
  QuadScheme scheme = QuadScheme::SubstGauss;
  double truncation_tol = 1e-16;  // semi-infinite truncation threshold

  void validate() const;
};

struct QuadResult {
  Cx value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

using RealIntegrand = std::function<Cx(double)>;
using PathIntegrand = std::function<Cx(Cx)>;

// Integral of f(t) / sqrt(1-t^2) dt (InvSqrt1mT2) or of f(t) dt (None) over
// [0, 1]. Any non-finite sample raises; failure to converge within the
// level/evaluation budget returns the best value with converged = false.
QuadResult integrate_01_weighted(const RealIntegrand& f, WeightMode mode,
                                 const QuadConfig& cfg = {});

// Integral of f over [0, inf) for |f(x)| <= M exp(-decay_rate_hint x)
// eventually: truncated at X = ln(1/truncation_tol)/decay_rate_hint and
// integrated in oscillation-period-sized panels.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double decay_rate_hint, const QuadConfig& cfg = {});

// Straight-line path integral: (z1 - z0) * int_0^1 f(z0 + s (z1 - z0)) ds.
// Integrable endpoint singularities up to 1/sqrt are tolerated at either end.
QuadResult integrate_segment(const PathIntegrand& f, Cx z0, Cx z1,
                             const QuadConfig& cfg = {});

}  // namespace glaisher
