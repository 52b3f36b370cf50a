#include "glaisher/identities.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace glaisher {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Cx kI{0.0, 1.0};

double theta_of(int n, int j) { return kPi * (2 * j - 1) / (2.0 * n); }

// sqrt(1 - t^2) without cancellation for t near 1.
double sqrt_1mt2(double t) { return std::sqrt((1.0 - t) * (1.0 + t)); }

double th1_core(int n, double a, double t) {
  if (t == 0.0) return 0.0;
  const double A = std::asin(t);
  const double B = std::asinh(t / a);
  return std::sin(n * A) * std::sinh(n * B) /
         ((std::cos(2.0 * n * A) + std::cosh(2.0 * n * B)) * t *
          std::sqrt(1.0 + (t * t) / (a * a)));
}

double th2_core(int n, double a, double t) {
  const double A = std::asin(t);
  const double B = std::asinh(t / a);
  return std::cos(n * A) * std::cosh(n * B) * t /
         ((std::cos(2.0 * n * A) + std::cosh(2.0 * n * B)) *
          std::sqrt(1.0 + (t * t) / (a * a)));
}

double th3_core(int n, int k, double t) {
  const double rt = std::sqrt(t);
  const double den =
      std::cos(2.0 * n * std::asin(rt)) + std::cosh(2.0 * n * std::asinh(rt));
  return (k == 0 ? 1.0 : std::pow(t, 2 * k)) / den;
}

double glaisher1_integrand(double a, double x) {
  if (x == 0.0) return 0.0;
  return std::sin(x) * std::sinh(x / a) /
         ((std::cos(2.0 * x) + std::cosh(2.0 * x / a)) * x);
}

double glaisher2_integrand(double x) {
  return std::cos(x) * std::cosh(x) * x / (std::cos(2.0 * x) + std::cosh(2.0 * x));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Th1: return "TH1";
    case Family::Th2: return "TH2";
    case Family::Th2GeneralA: return "TH2_GENERAL_A";
    case Family::Th3: return "TH3";
    case Family::Glaisher1: return "GLAISHER1";
    case Family::Glaisher2: return "GLAISHER2";
    case Family::Lemma2: return "LEMMA2";
    case Family::IsmailValent: return "IV";
  }
  return "?";
}

void validate(const FamilyParams& p) {
  switch (p.family) {
    case Family::Th1:
      if (p.n < 1 || p.n % 2 == 0)
        throw std::invalid_argument("TH1 requires odd n >= 1");
      if (!(p.a > 0.0)) throw std::invalid_argument("TH1 requires a > 0");
      break;
    case Family::Th2:
    case Family::Th2GeneralA:
      if (p.n < 2 || p.n % 2 != 0)
        throw std::invalid_argument("TH2 requires even n >= 2");
      if (!(p.a > 0.0)) throw std::invalid_argument("TH2 requires a > 0");
      break;
    case Family::Th3:
      if (p.n < 2) throw std::invalid_argument("TH3 requires n >= 2");
      if (p.k < 0 || p.k >= p.n / 2)
        throw std::invalid_argument("TH3 requires 0 <= k < floor(n/2)");
      break;
    case Family::Glaisher1:
      if (!(p.a > 0.0)) throw std::invalid_argument("GLAISHER1 requires a > 0");
      break;
    case Family::Glaisher2:
      break;
    case Family::Lemma2:
      if (!(p.a > 0.0)) throw std::invalid_argument("LEMMA2 requires a > 0");
      if (!(p.theta > 0.0) || p.theta > kPi / 2)
        throw std::invalid_argument("LEMMA2 requires theta in (0, pi/2]");
      break;
    case Family::IsmailValent:
      if (!(p.modulus > 0.0) || !(p.modulus < 1.0))
        throw std::invalid_argument("IV requires modulus in (0, 1)");
      break;
  }
}

double integrand(const FamilyParams& p, double t, bool include_weight) {
  validate(p);
  const double w = include_weight ? 1.0 / sqrt_1mt2(t) : 1.0;
  switch (p.family) {
    case Family::Th1: return th1_core(p.n, p.a, t) * w;
    case Family::Th2:
    case Family::Th2GeneralA: return th2_core(p.n, p.a, t) * w;
    case Family::Th3: return th3_core(p.n, p.k, t) * w;
    case Family::Glaisher1: return glaisher1_integrand(p.a, t);
    case Family::Glaisher2: return glaisher2_integrand(t);
    default:
      throw std::invalid_argument("integrand: family has no real scalar integrand");
  }
}

Cx rhs_closed_form(const FamilyParams& p) {
  validate(p);
  switch (p.family) {
    case Family::Th1:
    case Family::Glaisher1: return Cx(0.5 * std::atan(p.a), 0.0);
    case Family::Th2:
    case Family::Glaisher2: return Cx(0.0, 0.0);
    case Family::Th3: {
      const double sign = (p.k % 2 == 0) ? 1.0 : -1.0;
      return Cx(kPi * sign / (std::ldexp(1.0, 2 * p.k + 1) * p.n) *
                    finite_sum(SumKind::Th3Sum, p.n, p.k),
                0.0);
    }
    case Family::Th2GeneralA: {
      const int n = p.n;
      const double a = p.a;
      const double a_n = std::pow(a, n);
      const double c_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
      Cx acc(0.5 * c_sign * a_n * a / (1.0 + a_n * a_n) * std::atan(1.0 / a), 0.0);
      for (int j = 1; j <= n; ++j) {
        const double th = theta_of(n, j);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const Cx denom = a * a - 1.0 + 2.0 * kI * a * std::cos(th);
        acc += a * a * sign * (std::atanh(std::cos(th)) - kI * std::atan(a)) *
               std::sin(th) / (2.0 * n * denom);
      }
      return acc;
    }
    case Family::Lemma2: return lemma2_closed_form(p.a, p.theta);
    case Family::IsmailValent: return Cx(1.0, 0.0);
  }
  return Cx(0.0, 0.0);
}

namespace {

VerificationReport make_report(const FamilyParams& p, Cx lhs, Cx rhs, double tol,
                               long evals, bool converged, const Timer& timer) {
  VerificationReport r;
  r.family = family_name(p.family);
  switch (p.family) {
    case Family::Th1:
    case Family::Th2: r.n = p.n; r.a = p.a; break;
    case Family::Th2GeneralA: r.n = p.n; r.a = p.a; break;
    case Family::Th3: r.n = p.n; r.k = p.k; break;
    case Family::Glaisher1: r.a = p.a; break;
    case Family::Glaisher2: break;
    case Family::Lemma2: r.a = p.a; break;
    case Family::IsmailValent: r.a = p.modulus; break;
  }
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.tol = tol;
  r.evaluations = evals;
  r.pass = converged && r.abs_err <= tol;
  if (!converged) r.notes.push_back("quadrature did not converge");
  r.runtime_ms = timer.ms();
  return r;
}

}  // namespace

VerificationReport verify(const FamilyParams& p, const QuadConfig& cfg) {
  validate(p);
  Timer timer;
  switch (p.family) {
    case Family::Th1: {
      auto f = [&p](double t) { return Cx(th1_core(p.n, p.a, t), 0.0); };
      QuadResult q = integrate_01_weighted(f, WeightMode::InvSqrt1mT2, cfg);
      return make_report(p, q.value, rhs_closed_form(p), 1e-10, q.evaluations,
                         q.converged, timer);
    }
    case Family::Th2: {
      auto f = [&p](double t) { return Cx(th2_core(p.n, p.a, t), 0.0); };
      QuadResult q = integrate_01_weighted(f, WeightMode::InvSqrt1mT2, cfg);
      return make_report(p, q.value, Cx(0.0, 0.0), 1e-10, q.evaluations, q.converged,
                         timer);
    }
    case Family::Th2GeneralA: {
      auto f = [&p](double t) { return Cx(th2_core(p.n, p.a, t), 0.0); };
      QuadResult q = integrate_01_weighted(f, WeightMode::InvSqrt1mT2, cfg);
      const Cx rhs = rhs_closed_form(p);
      VerificationReport r = make_report(p, q.value, Cx(rhs.real(), 0.0), 1e-10,
                                         q.evaluations, q.converged, timer);
      r.rhs = rhs;
      if (std::abs(rhs.imag()) > r.tol) {
        r.pass = false;
        r.notes.push_back("imaginary part of the closed form failed to cancel");
      }
      return r;
    }
    case Family::Th3: {
      auto f = [&p](double t) { return Cx(th3_core(p.n, p.k, t), 0.0); };
      QuadResult q = integrate_01_weighted(f, WeightMode::InvSqrt1mT2, cfg);
      VerificationReport r = make_report(p, q.value, rhs_closed_form(p), 1e-10,
                                         q.evaluations, q.converged, timer);
      if (p.n % 2 != 0)
        r.notes.push_back("exploratory: odd n with sum truncated at floor(n/2)");
      return r;
    }
    case Family::Glaisher1: {
      auto f = [&p](double x) { return glaisher1_integrand(p.a, x); };
      QuadResult q = integrate_semi_infinite(f, 1.0 / p.a, cfg);
      return make_report(p, q.value, rhs_closed_form(p), 1e-8, q.evaluations,
                         q.converged, timer);
    }
    case Family::Glaisher2: {
      QuadResult q = integrate_semi_infinite(glaisher2_integrand, 1.0, cfg);
      return make_report(p, q.value, Cx(0.0, 0.0), 1e-8, q.evaluations, q.converged,
                         timer);
    }
    case Family::Lemma2: return verify_lemma2(p.a, p.theta, cfg);
    case Family::IsmailValent: return ismail_valent_check(p.modulus, cfg);
  }
  throw std::logic_error("verify: unhandled family");
}

Cx lemma2_closed_form(double a, double theta) {
  if (!(a > 0.0)) throw std::invalid_argument("lemma2_closed_form: a must be > 0");
  if (!(theta > 0.0) || theta > kPi / 2)
    throw std::invalid_argument("lemma2_closed_form: theta must be in (0, pi/2]");
  const double c = std::cos(theta);
  return (std::atan(a) + kI * std::atanh(c)) / (kI * (a * c + kI) * (a + kI * c));
}

VerificationReport verify_lemma2(double a, double theta, const QuadConfig& cfg) {
  Timer timer;
  const Cx rhs = lemma2_closed_form(a, theta);  // validates a, theta
  const double s2 = std::sin(theta) * std::sin(theta);
  const Cx denom_coef = Cx(a * a - 1.0, 2.0 * a * std::cos(theta));
  auto f = [a, s2, denom_coef](double t) {
    return t /
           ((t * t * denom_coef - a * a * s2) * sqrt_1mt2(t) *
            std::sqrt(1.0 + (t * t) / (a * a)));
  };
  QuadResult q = integrate_01_weighted(f, WeightMode::None, cfg);
  FamilyParams p;
  p.family = Family::Lemma2;
  p.a = a;
  p.theta = theta;
  VerificationReport r = make_report(p, q.value, rhs, 1e-11, q.evaluations, q.converged,
                                     timer);
  r.notes.push_back("theta=" + fmt17(theta));
  return r;
}

double lemma2_consequence(double theta) {
  if (!(theta > 0.0) || !(theta < kPi / 2))
    throw std::invalid_argument("lemma2_consequence: theta must be in (0, pi/2)");
  const double c = std::cos(theta);
  const double cot = c / std::sin(theta);
  return 0.5 * kPi * cot * cot / (1.0 + c * c);
}

double finite_sum(SumKind kind, int n, int k) {
  if (n < 1) throw std::invalid_argument("finite_sum: n must be >= 1");
  switch (kind) {
    case SumKind::Lemma3: {
      if (n % 2 == 0) throw std::invalid_argument("finite_sum(Lemma3): n must be odd");
      double s = 0.0;
      for (int j = 1; j <= n; ++j)
        s += ((j % 2 == 1) ? 1.0 : -1.0) / std::sin(theta_of(n, j));
      return s;
    }
    case SumKind::AtanhCancel: {
      if (n % 2 == 0)
        throw std::invalid_argument("finite_sum(AtanhCancel): n must be odd");
      double s = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double th = theta_of(n, j);
        s += ((j % 2 == 1) ? 1.0 : -1.0) * std::atanh(std::cos(th)) / std::sin(th);
      }
      return s;
    }
    case SumKind::TanEven: {
      if (n % 2 != 0) throw std::invalid_argument("finite_sum(TanEven): n must be even");
      double s = 0.0;
      for (int j = 1; j <= n; ++j)
        s += ((j % 2 == 0) ? 1.0 : -1.0) * std::tan(theta_of(n, j));
      return s;
    }
    case SumKind::Th3Sum: {
      if (k < 0) throw std::invalid_argument("finite_sum(Th3Sum): k must be >= 0");
      double s = 0.0;
      for (int j = 1; j <= n / 2; ++j) {
        const double th = theta_of(n, j);
        const double tn = std::tan(th);
        const double base = std::sin(th) * std::sin(th) / std::cos(th);
        s += ((j % 2 == 1) ? 1.0 : -1.0) * tn / std::cosh(n * std::asinh(tn)) *
             (k == 0 ? 1.0 : std::pow(base, 2 * k));
      }
      return s;
    }
    case SumKind::Th3AltRhs: {
      double s = 0.0;
      for (int y = 1; y <= n; ++y) {
        const double u = std::asinh(std::sin(theta_of(n, y)));
        s += std::tanh(u) / std::tanh(n * u);
      }
      return s - 0.5 * n;
    }
  }
  throw std::logic_error("finite_sum: unhandled kind");
}

namespace {

Cx sym_integrand(SymFamily fam, int n, int k, Cx z) {
  if (z == Cx(0.0, 0.0)) return Cx(0.0, 0.0);  // removable
  const Cx az = alpha(z, n);
  const Cx den = (std::cos(kPi * z) + std::cosh(az)) * std::sinh(az / double(n));
  if (fam == SymFamily::Th1Sym)
    return std::sin(0.5 * kPi * z) * std::sinh(0.5 * az) / den;
  Cx s = std::sin(kPi * z / (2.0 * n));
  Cx p{1.0, 0.0};
  for (int i = 0; i < 4 * k + 2; ++i) p *= s;
  return p / den;
}

}  // namespace

VerificationReport SymmetryReport::to_report(double tol) const {
  VerificationReport r;
  r.family = family == SymFamily::Th1Sym ? "TH1_SYM" : "TH3_SYM";
  r.n = n;
  if (family == SymFamily::Th3Sym) r.k = k;
  r.lhs = j_imag;
  r.rhs = j_real;
  r.abs_err = symmetry_err;
  r.tol = tol;
  r.pass = pass;
  r.evaluations = evaluations;
  r.notes = notes;
  return r;
}

SymmetryReport symmetry_check(SymFamily fam, int n, int k, const QuadConfig& cfg) {
  if (fam == SymFamily::Th1Sym) {
    if (n < 1 || n % 2 == 0)
      throw std::invalid_argument("symmetry_check(Th1Sym): n must be odd");
    k = 0;
  } else {
    if (n < 2) throw std::invalid_argument("symmetry_check(Th3Sym): n must be >= 2");
    if (k < 0 || k >= n / 2)
      throw std::invalid_argument("symmetry_check(Th3Sym): require 0 <= k < floor(n/2)");
  }
  SymmetryReport rep;
  rep.family = fam;
  rep.n = n;
  rep.k = k;

  auto g = [fam, n, k](Cx z) { return sym_integrand(fam, n, k, z); };
  QuadResult real_leg = integrate_segment(g, Cx(0.0, 0.0), Cx(double(n), 0.0), cfg);
  QuadResult imag_leg = integrate_segment(g, Cx(0.0, y_star(n)), Cx(0.0, 0.0), cfg);
  rep.j_real = real_leg.value;
  rep.j_imag = imag_leg.value;
  rep.symmetry_err = std::abs(rep.j_imag - rep.j_real);
  rep.evaluations = real_leg.evaluations + imag_leg.evaluations;

  // dy sinh(alpha_s/n) = ds sin(pi s/n) along y(s) = alpha_s / pi.
  const double h = 1e-6;
  for (int i = 0; i < 20; ++i) {
    const double s = n * (i + 0.5) / 20.0;
    const double yp = (alpha(Cx(s + h, 0.0), n).real() - alpha(Cx(s - h, 0.0), n).real()) /
                      (2.0 * h * kPi);
    const double expected =
        std::sin(kPi * s / n) / std::sinh(alpha(Cx(s, 0.0), n).real() / n);
    rep.jacobian_max_rel =
        std::max(rep.jacobian_max_rel, std::abs(yp - expected) / std::abs(expected));
  }

  // Rewriting chain back to the theorem-side integral.
  QuadResult theorem_side;
  if (fam == SymFamily::Th1Sym) {
    rep.chain_factor = kPi / n;
    auto f = [n](double t) { return Cx(th1_core(n, 1.0, t), 0.0); };
    theorem_side = integrate_01_weighted(f, WeightMode::InvSqrt1mT2, cfg);
  } else {
    // The printed rewriting carries pi/n, but the substitution
    // t = sin^2(pi x/(2n)) yields dt/sqrt(1-t^2) =
    // (2 pi/n) sin^2(pi x/(2n)) dx / sinh(alpha_x/n): factor 2 pi/n.
    rep.chain_factor = 2.0 * kPi / n;
    rep.notes.push_back(
        "rewriting factor corrected to 2*pi/n; the printed pi/n fails by exactly 2");
    auto f = [n, k](double t) { return Cx(th3_core(n, k, t), 0.0); };
    theorem_side = integrate_01_weighted(f, WeightMode::InvSqrt1mT2, cfg);
  }
  rep.evaluations += theorem_side.evaluations;
  rep.chain_value = rep.chain_factor * rep.j_real.real();
  rep.chain_reference = theorem_side.value.real();
  rep.chain_err = std::abs(rep.chain_value - rep.chain_reference);

  const bool converged = real_leg.converged && imag_leg.converged && theorem_side.converged;
  rep.pass = converged && rep.symmetry_err <= 1e-8 && rep.jacobian_max_rel <= 1e-6 &&
             rep.chain_err <= 1e-9;
  if (!converged) rep.notes.push_back("quadrature did not converge");
  return rep;
}

double agm(double a0, double b0) {
  if (!(a0 > 0.0) || !(b0 > 0.0)) throw std::invalid_argument("agm: arguments must be > 0");
  double a = a0, b = b0;
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
    const double am = 0.5 * (a + b);
    const double gm = std::sqrt(a * b);
    a = am;
    b = gm;
  }
  return 0.5 * (a + b);
}

double elliptic_K(double modulus) {
  if (!(modulus >= 0.0) || !(modulus < 1.0))
    throw std::invalid_argument("elliptic_K: modulus must be in [0, 1)");
  return kPi / (2.0 * agm(1.0, std::sqrt((1.0 - modulus) * (1.0 + modulus))));
}

VerificationReport ismail_valent_check(double modulus, const QuadConfig& cfg) {
  Timer timer;
  if (!(modulus > 0.0) || !(modulus < 1.0))
    throw std::invalid_argument("ismail_valent_check: modulus must be in (0, 1)");
  const double K = elliptic_K(modulus);
  const double Kp = elliptic_K(std::sqrt((1.0 - modulus) * (1.0 + modulus)));
  // t = u^2/2 on each half line: the sqrt(2t) normalization gives weight u du.
  auto pos = [K, Kp](double u) { return u / (std::cos(K * u) + std::cosh(Kp * u)); };
  auto neg = [K, Kp](double u) { return u / (std::cosh(K * u) + std::cos(Kp * u)); };
  QuadResult qp = integrate_semi_infinite(pos, 0.9 * Kp, cfg);
  QuadResult qn = integrate_semi_infinite(neg, 0.9 * K, cfg);

  FamilyParams p;
  p.family = Family::IsmailValent;
  p.modulus = modulus;
  VerificationReport r = make_report(p, qp.value + qn.value, Cx(1.0, 0.0), 1e-6,
                                     qp.evaluations + qn.evaluations,
                                     qp.converged && qn.converged, timer);
  r.notes.push_back("K=" + fmt17(K) + " K'=" + fmt17(Kp));
  r.notes.push_back(
      "sqrt(2t) normalization; the sqrt(t) display integrates to " +
      fmt17(2.0 * (qp.value + qn.value).real()) + " (twice the stated value)");
  return r;
}

LargeNCheck large_n_limit_check(int n, double a, const std::vector<double>& x_points) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("large_n_limit_check: n must be odd");
  if (!(a > 0.0)) throw std::invalid_argument("large_n_limit_check: a must be > 0");
  LargeNCheck out;
  out.x_points = x_points;
  for (double x : x_points) {
    const double t = std::sin(x / n);
    const double scaled =
        th1_core(n, a, t) / sqrt_1mt2(t) * std::cos(x / n) / n;
    const double limit = glaisher1_integrand(a, x);
    out.rel_dev.push_back(std::abs(scaled - limit) / std::abs(limit));
    out.max_rel_dev = std::max(out.max_rel_dev, out.rel_dev.back());
  }
  return out;
}

}  // namespace glaisher
