#include "glaisher/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace glaisher {

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("QuadConfig: tolerances must be positive");
  if (max_levels < 3) throw std::invalid_argument("QuadConfig: max_levels must be >= 3");
  if (max_evals < 15) throw std::invalid_argument("QuadConfig: max_evals too small");
  if (!(truncation_tol > 0.0))
    throw std::invalid_argument("QuadConfig: truncation_tol must be positive");
}

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod nodes with embedded 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXK15[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWK15[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWG7[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct CountedFn {
  const std::function<Cx(double)>& g;
  long count = 0;

  Cx operator()(double u) {
    Cx v = g(u);
    require_finite(v, "quadrature integrand");
    ++count;
    return v;
  }
};

struct PanelEval {
  Cx integral;
  double err;
};

PanelEval gk15(CountedFn& g, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Cx fc = g(c);
  Cx resk = kWK15[7] * fc;
  Cx resg = kWG7[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXK15[i];
    Cx fsum = g(c - dx) + g(c + dx);
    resk += kWK15[i] * fsum;
    if (i % 2 == 1) resg += kWG7[(i - 1) / 2] * fsum;
  }
  return {resk * h, std::abs((resk - resg) * h)};
}

QuadResult gk_adaptive(CountedFn& g, double a, double b, const QuadConfig& cfg) {
  struct Panel {
    double a, b;
    Cx val;
    double err;
    int depth;
  };
  PanelEval first = gk15(g, a, b);
  std::vector<Panel> panels{{a, b, first.integral, first.err, 0}};
  Cx total = first.integral;
  double total_err = first.err;
  for (;;) {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (total_err <= tol) return {total, total_err, g.count, true};
    int worst = -1;
    double worst_err = 0.0;
    for (int i = 0; i < static_cast<int>(panels.size()); ++i) {
      if (panels[i].depth < cfg.max_levels && panels[i].err > worst_err) {
        worst_err = panels[i].err;
        worst = i;
      }
    }
    if (worst < 0 || g.count + 30 > cfg.max_evals)
      return {total, total_err, g.count, false};
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    PanelEval left = gk15(g, p.a, mid);
    PanelEval right = gk15(g, mid, p.b);
    total += left.integral + right.integral - p.val;
    total_err += left.err + right.err - p.err;
    panels[worst] = {p.a, mid, left.integral, left.err, p.depth + 1};
    panels.push_back({mid, p.b, right.integral, right.err, p.depth + 1});
  }
}

// tanh-sinh rule with level-doubled step; nodes u in [-kUMax, kUMax] cover
// abscissa offsets down to ~5e-21 of the half-width.
constexpr double kUMax = 3.4;

QuadResult de_levels(CountedFn& g, double a, double b, const QuadConfig& cfg) {
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  auto weighted_sample = [&](double u) -> Cx {
    const double v = 0.5 * kPi * std::sinh(u);
    const double ch = std::cosh(v);
    const double w = 0.5 * kPi * std::cosh(u) / (ch * ch);
    return (w * r) * g(c + r * std::tanh(v));
  };

  double h = 1.0;
  Cx acc{0.0, 0.0};
  for (long k = -3; k <= 3; ++k) acc += weighted_sample(k * h);
  Cx integral = acc * h;
  double err = std::abs(integral);
  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    long kmax = static_cast<long>(std::ceil(kUMax / h));
    if (kmax % 2 == 0) --kmax;  // refinement adds the odd multiples of h only
    const long new_samples = kmax + 1;
    if (g.count + new_samples > cfg.max_evals) return {integral, err, g.count, false};
    Cx odd{0.0, 0.0};
    for (long k = -kmax; k <= kmax; k += 2) odd += weighted_sample(k * h);
    Cx next = 0.5 * integral + odd * h;
    err = std::abs(next - integral);
    integral = next;
    if (level >= 2 && err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(integral)))
      return {integral, err, g.count, true};
  }
  return {integral, err, g.count, false};
}

QuadResult run_scheme(const std::function<Cx(double)>& g, double a, double b,
                      const QuadConfig& cfg) {
  CountedFn counted{g};
  if (cfg.scheme == QuadScheme::DoubleExp) return de_levels(counted, a, b, cfg);
  return gk_adaptive(counted, a, b, cfg);
}

// Keeps sin(theta) strictly below 1 so weight-carrying integrands are never
// sampled at the endpoint itself; the dropped sliver is O(1e-14 |g'|).
constexpr double kThetaClamp = 1e-7;

// Keeps segment samples off both endpoints (offset >= ~1e-14 of the span).
constexpr double kPhiClamp = 1e-7;

}  // namespace

QuadResult integrate_01_weighted(const RealIntegrand& f, WeightMode mode,
                                 const QuadConfig& cfg) {
  cfg.validate();
  if (mode == WeightMode::InvSqrt1mT2) {
    auto g = [&f](double theta) { return f(std::sin(theta)); };
    return run_scheme(g, 0.0, 0.5 * kPi, cfg);
  }
  const double theta_max = 0.5 * kPi - kThetaClamp;
  auto g = [&f, theta_max](double theta) {
    const double th = std::min(theta, theta_max);
    return f(std::sin(th)) * std::cos(th);
  };
  return run_scheme(g, 0.0, 0.5 * kPi, cfg);
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double decay_rate_hint, const QuadConfig& cfg) {
  cfg.validate();
  if (!(decay_rate_hint > 0.0))
    throw std::invalid_argument("integrate_semi_infinite: decay_rate_hint must be > 0");
  const double cutoff = std::log(1.0 / cfg.truncation_tol) / decay_rate_hint;
  const long npanels = std::max<long>(1, static_cast<long>(std::ceil(cutoff / kPi)));
  QuadConfig panel_cfg = cfg;
  panel_cfg.abs_tol = cfg.abs_tol / static_cast<double>(npanels);

  auto g = [&f](double x) { return Cx(f(x), 0.0); };
  QuadResult out;
  out.converged = true;
  for (long p = 0; p < npanels; ++p) {
    const double lo = std::min(cutoff, p * kPi);
    const double hi = std::min(cutoff, (p + 1) * kPi);
    QuadResult piece = run_scheme(g, lo, hi, panel_cfg);
    out.value += piece.value;
    out.error_estimate += piece.error_estimate;
    out.evaluations += piece.evaluations;
    out.converged = out.converged && piece.converged;
  }
  const double tail = f(cutoff);
  if (!std::isfinite(tail)) throw_non_finite("integrate_semi_infinite", Cx(tail, 0.0));
  ++out.evaluations;
  out.error_estimate += std::abs(tail) / decay_rate_hint +
                        cfg.truncation_tol * (1.0 + std::abs(out.value));
  out.converged =
      out.converged &&
      out.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
  return out;
}

QuadResult integrate_segment(const PathIntegrand& f, Cx z0, Cx z1, const QuadConfig& cfg) {
  cfg.validate();
  require_finite(z0, "integrate_segment");
  require_finite(z1, "integrate_segment");
  const Cx span = z1 - z0;
  if (span == Cx(0.0, 0.0)) return {Cx(0.0, 0.0), 0.0, 0, true};
  // s = sin^2(phi) regularizes integrable endpoint singularities at both ends.
  auto g = [&f, z0, span](double phi) {
    const double ph = std::clamp(phi, kPhiClamp, 0.5 * kPi - kPhiClamp);
    const double s = std::sin(ph);
    return f(z0 + (s * s) * span) * std::sin(2.0 * ph);
  };
  QuadConfig inner_cfg = cfg;
  inner_cfg.abs_tol = cfg.abs_tol / std::max(1.0, std::abs(span));
  QuadResult out = run_scheme(g, 0.0, 0.5 * kPi, inner_cfg);
  out.value *= span;
  out.error_estimate *= std::abs(span);
  out.converged = out.converged && out.error_estimate <=
                                       std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
  return out;
}

}  // namespace glaisher
