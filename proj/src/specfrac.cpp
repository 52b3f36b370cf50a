#include "glaisher/specfrac.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace glaisher {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Cx kI{0.0, 1.0};

double theta_of(int n, int j) { return kPi * (2 * j - 1) / (2.0 * n); }

void check_index(int n, int j, int jmax, const char* where) {
  if (n < 1) throw std::invalid_argument(std::string(where) + ": n must be >= 1");
  if (j < 1 || j > jmax)
    throw std::invalid_argument(std::string(where) + ": index j out of range");
}

Cx pow_int(Cx base, int e) {
  Cx r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int nearest_sign(Cx ratio, const char* where) {
  const double re = ratio.real();
  const int s = re >= 0.0 ? 1 : -1;
  if (std::abs(ratio - Cx(static_cast<double>(s), 0.0)) > 1e-9)
    throw std::domain_error(std::string(where) +
                            ": branch identity ratio is not +-1 within 1e-9");
  return s;
}

}  // namespace

Cx PFExpansion::eval(Cx v) const {
  Cx acc = constant;
  for (const auto& term : terms) acc += term.residue / (v - term.pole);
  return acc;
}

RootData roots_lemma1(int n, Cx a, int j) {
  check_index(n, j, n, "roots_lemma1");
  RootData r;
  r.j = j;
  r.theta = theta_of(n, j);
  const double s = std::sin(r.theta);
  const double c = std::cos(r.theta);
  const Cx denom = a * a - 1.0 + 2.0 * kI * a * c;
  if (std::abs(denom) <= 1e-12 * (1.0 + std::norm(a))) {
    r.degenerate = true;
    r.x = Cx(std::numeric_limits<double>::infinity(), 0.0);
    return r;
  }
  r.x = a * a * (s * s) / denom;
  return r;
}

std::pair<int, int> verify_signs(int n, double a, int j) {
  RootData root = roots_lemma1(n, Cx(a, 0.0), j);
  if (root.degenerate)
    throw std::invalid_argument("verify_signs: degenerate root has no sign pair");
  const Cx sx = std::sqrt(root.x);
  const Cx A = casin(sx);
  const Cx B = casinh(sx / a);
  const int mu = nearest_sign(std::cosh(double(n) * B) / std::sin(double(n) * A),
                              "verify_signs(mu)");
  const int nu = nearest_sign(std::cos(double(n) * A) / (kI * std::sinh(double(n) * B)),
                              "verify_signs(nu)");
  return {mu, nu};
}

PFExpansion expansion_lemma1(int n, Cx a) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("expansion_lemma1: n must be a positive odd integer");
  if (a == Cx(0.0, 0.0)) throw std::invalid_argument("expansion_lemma1: a must be nonzero");
  PFExpansion ex;
  ex.family = PFFamily::Lemma1;
  ex.n = n;
  ex.a = a;
  for (int j = 1; j <= n; ++j) {
    RootData root = roots_lemma1(n, a, j);
    const double s = std::sin(root.theta);
    const double c = std::cos(root.theta);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    const Cx numer = kI * sign * (a * c + kI) * (a + kI * c);
    if (root.degenerate) {
      // The displayed term at D = 0 reduces to the finite constant
      // numer / (s * (-a^2 s^2)).
      ex.constant += numer / (s * (-(a * a) * (s * s)));
      ex.notes.push_back("degenerate root j=" + std::to_string(j) +
                         " folded into the constant term");
      continue;
    }
    const Cx denom = a * a - 1.0 + 2.0 * kI * a * c;
    ex.terms.push_back({root.x, numer / (s * denom)});
  }
  return ex;
}

PFExpansion expansion_lemma4(int n, double a) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("expansion_lemma4: n must be a positive even integer");
  if (!(a > 0.0)) throw std::invalid_argument("expansion_lemma4: a must be > 0");
  PFExpansion ex;
  ex.family = PFFamily::Lemma4;
  ex.n = n;
  ex.a = Cx(a, 0.0);
  const double a_n = std::pow(a, n);
  const double c_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  ex.constant = Cx(0.5 * c_sign * a_n / (1.0 + a_n * a_n), 0.0);
  for (int j = 1; j <= n; ++j) {
    RootData root = roots_lemma1(n, Cx(a, 0.0), j);
    const double s = std::sin(root.theta);
    const double c = std::cos(root.theta);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const Cx denom = a * a - 1.0 + 2.0 * kI * a * c;
    const Cx residue =
        sign * a * a * s * (a * c + kI) * (a + kI * c) / (2.0 * n * denom * denom);
    ex.terms.push_back({root.x, residue});
  }
  return ex;
}

RootData roots_lemma5(int n, int j) {
  check_index(n, j, n / 2, "roots_lemma5");
  RootData r;
  r.j = j;
  r.theta = theta_of(n, j);
  const double s = std::sin(r.theta);
  const double c = std::cos(r.theta);
  r.x = -kI * (s * s) / (2.0 * c);
  r.y = -r.x;
  const int sign = (j % 2 == 1) ? 1 : -1;
  r.sign_mu = sign;
  r.sign_nu = sign;
  BranchData b;
  b.xi = kPi * (2 * j - 1) / (4.0 * n);
  b.psi = b.xi;
  b.eta = 0.5 * std::asinh(std::tan(r.theta));
  b.phi = b.eta;
  const Cx sx = std::sqrt(r.x);
  if (std::abs(casin(sx) - Cx(b.xi, -b.eta)) > 1e-12 ||
      std::abs(casinh(sx) - Cx(b.phi, -b.psi)) > 1e-12)
    throw std::domain_error("roots_lemma5: branch decomposition check failed");
  r.branch = b;
  return r;
}

namespace {

void check_lemma5_params(int n, int k, const char* where) {
  if (n < 2) throw std::invalid_argument(std::string(where) + ": n must be >= 2");
  if (k < 0 || k >= n / 2)
    throw std::invalid_argument(std::string(where) + ": require 0 <= k < floor(n/2)");
}

}  // namespace

PFExpansion expansion_lemma5(int n, int k) {
  check_lemma5_params(n, k, "expansion_lemma5");
  PFExpansion ex;
  ex.family = PFFamily::Lemma5;
  ex.n = n;
  ex.k = k;
  const PolyRat dq = build_Q_scaled(n).derivative();
  for (int j = 1; j <= n / 2; ++j) {
    RootData root = roots_lemma5(n, j);
    ex.terms.push_back({root.x, pow_int(root.x, 2 * k) / dq(root.x)});
    ex.terms.push_back({root.y, pow_int(root.y, 2 * k) / dq(root.y)});
  }
  ex.notes.push_back(
      "residues from exact polynomial derivative; the intermediate closed form for "
      "Q'(x_j) is inconsistent with it (n=2 ratio 3) though the expansion itself "
      "verifies");
  return ex;
}

Lemma5Routes lemma5_residue_routes(int n, int k) {
  check_lemma5_params(n, k, "lemma5_residue_routes");
  Lemma5Routes routes;
  const PolyRat dq = build_Q_scaled(n).derivative();
  const double k_scale = ((k % 2 == 0) ? 1.0 : -1.0) / (std::ldexp(1.0, 2 * k) * n);
  for (int j = 1; j <= n / 2; ++j) {
    const double th = theta_of(n, j);
    const double s = std::sin(th);
    const double c = std::cos(th);
    const double tn = std::tan(th);
    const double jsign = (j % 2 == 1) ? 1.0 : -1.0;
    const double stmt = k_scale * jsign * tn / std::cosh(n * std::asinh(tn)) *
                        (1.0 + c * c) * (tn * tn) * std::pow(s * s / c, 2 * k);
    routes.statement.push_back(Cx(stmt, 0.0));

    const Cx x = -kI * (s * s) / (2.0 * c);
    const Cx qp = dq(x);
    routes.from_derivative.push_back(8.0 * pow_int(x, 2 * k + 1) / qp);

    const Cx qp_display = 4.0 * n * kI * (-jsign) * (c * c) / (s * (1.0 + c * c));
    routes.qprime_display_ratio.push_back(std::abs(qp / qp_display));
  }
  for (size_t i = 0; i < routes.statement.size(); ++i) {
    const double rel = std::abs(routes.statement[i] - routes.from_derivative[i]) /
                       std::abs(routes.statement[i]);
    routes.max_rel_diff = std::max(routes.max_rel_diff, rel);
  }
  return routes;
}

Cx lemma1_lhs(int n, Cx a, double t) {
  const Cx A = casin(Cx(t, 0.0));
  const Cx B = casinh(t / a);
  const double nn = n;
  return 2.0 * nn * std::sin(nn * A) * std::sinh(nn * B) /
         ((t * t) * (std::cos(2.0 * nn * A) + std::cosh(2.0 * nn * B)));
}

Cx lemma4_lhs(int n, double a, double t) {
  const double A = std::asin(t);
  const double B = std::asinh(t / a);
  return Cx(std::cos(n * A) * std::cosh(n * B) /
                (std::cos(2.0 * n * A) + std::cosh(2.0 * n * B)),
            0.0);
}

double lemma5_lhs(int n, int k, double t) {
  const double rt = std::sqrt(t);
  const double den = std::cos(2.0 * n * std::asin(rt)) + std::cosh(2.0 * n * std::asinh(rt));
  return std::pow(t, 2 * k) / den;
}

}  // namespace glaisher
