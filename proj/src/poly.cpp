#include "glaisher/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace glaisher {

double rat_to_double(const BigRat& r) { return r.convert_to<double>(); }

std::string rat_to_string(const BigRat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigRat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    return BigRat(num, den);
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return BigRat(BigInt(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const size_t frac_len = s.size() - dot - 1;
  BigInt den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return BigRat(BigInt(digits), den);
}

namespace {

std::vector<BigRat> trimmed(std::vector<BigRat> c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.push_back(BigRat(0));
  return c;
}

}  // namespace

PolyRat::PolyRat(std::vector<BigRat> coeffs, PolyVar var)
    : coeffs_(trimmed(std::move(coeffs))), var_(var) {}

BigRat PolyRat::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Cx PolyRat::operator()(Cx x) const {
  Cx acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + rat_to_double(*it);
  return acc;
}

PolyRat PolyRat::derivative() const {
  if (degree() == 0) return PolyRat::zero(var_);
  std::vector<BigRat> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<int>(i);
  return PolyRat(std::move(d), var_);
}

double PolyRat::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(rat_to_double(c)));
  return m;
}

PolyRat operator+(const PolyRat& p, const PolyRat& q) {
  std::vector<BigRat> c(std::max(p.coeffs_.size(), q.coeffs_.size()), BigRat(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
  return PolyRat(std::move(c), p.var_);
}

PolyRat operator-(const PolyRat& p, const PolyRat& q) {
  std::vector<BigRat> c(std::max(p.coeffs_.size(), q.coeffs_.size()), BigRat(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
  return PolyRat(std::move(c), p.var_);
}

PolyRat operator*(const PolyRat& p, const PolyRat& q) {
  std::vector<BigRat> c(p.coeffs_.size() + q.coeffs_.size() - 1, BigRat(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i)
    for (size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return PolyRat(std::move(c), p.var_);
}

PolyRat operator*(const BigRat& c, const PolyRat& p) {
  std::vector<BigRat> r = p.coeffs_;
  for (auto& x : r) x *= c;
  return PolyRat(std::move(r), p.var_);
}

namespace {

// w_0 = 1, w_1 = lin, w_{m+1} = 2 lin w_m - w_{m-1}; returns w_n.
PolyRat cheb_like(const PolyRat& lin, int n) {
  PolyRat prev = PolyRat::constant(BigRat(1), lin.var());
  if (n == 0) return prev;
  PolyRat cur = lin;
  const BigRat two(2);
  for (int m = 1; m < n; ++m) {
    PolyRat next = two * (lin * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void check_a(const BigRat& a, const char* where) {
  if (a == 0) throw std::invalid_argument(std::string(where) + ": a must be nonzero");
}

}  // namespace

PolyRat build_Q_lemma1(int n, const BigRat& a) {
  if (n < 1) throw std::invalid_argument("build_Q_lemma1: n must be >= 1");
  check_a(a, "build_Q_lemma1");
  const BigRat inv_a2 = BigRat(1) / (a * a);
  PolyRat u_lin({BigRat(1), BigRat(-2)}, PolyVar::XEqualsTSquared);
  PolyRat v_lin({BigRat(1), 2 * inv_a2}, PolyVar::XEqualsTSquared);
  return cheb_like(u_lin, n) + cheb_like(v_lin, n);
}

PolyRat build_P_lemma1(int n, const BigRat& a) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("build_P_lemma1: n must be a positive odd integer");
  check_a(a, "build_P_lemma1");
  const int m = (n - 1) / 2;
  // S_m(x) = sin((2m+1) asin t)/t and H_m(x) = sinh((2m+1) asinh(t/a))/(t/a)
  // share the Chebyshev-type recurrence with seeds 1 and 3 -+ 4x.
  const BigRat inv_a2 = BigRat(1) / (a * a);
  PolyRat s_lin({BigRat(1), BigRat(-2)}, PolyVar::XEqualsTSquared);
  PolyRat h_lin({BigRat(1), 2 * inv_a2}, PolyVar::XEqualsTSquared);
  PolyRat S = PolyRat::constant(BigRat(1), PolyVar::XEqualsTSquared);
  PolyRat H = S;
  if (m > 0) {
    PolyRat s1({BigRat(3), BigRat(-4)}, PolyVar::XEqualsTSquared);
    PolyRat h1({BigRat(3), 4 * inv_a2}, PolyVar::XEqualsTSquared);
    PolyRat s_prev = S, h_prev = H;
    S = s1;
    H = h1;
    const BigRat two(2);
    for (int i = 1; i < m; ++i) {
      PolyRat s_next = two * (s_lin * S) - s_prev;
      s_prev = std::move(S);
      S = std::move(s_next);
      PolyRat h_next = two * (h_lin * H) - h_prev;
      h_prev = std::move(H);
      H = std::move(h_next);
    }
  }
  return (BigRat(2 * n) / a) * (S * H);
}

Lemma4Result build_R_lemma4(int n, const BigRat& a) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("build_R_lemma4: n must be a positive even integer");
  check_a(a, "build_R_lemma4");
  const int m = n / 2;
  const BigRat inv_a2 = BigRat(1) / (a * a);
  PolyRat u_lin({BigRat(1), BigRat(-2)}, PolyVar::XEqualsTSquared);
  PolyRat v_lin({BigRat(1), 2 * inv_a2}, PolyVar::XEqualsTSquared);
  PolyRat product = cheb_like(u_lin, m) * cheb_like(v_lin, m);

  BigRat a_n = 1;
  for (int i = 0; i < n; ++i) a_n *= a;
  BigRat C = a_n / (2 * (1 + a_n * a_n));
  if (m % 2 != 0) C = -C;

  return {C, product - C * build_Q_lemma1(n, a)};
}

PolyRat build_Q_scaled(int n) {
  if (n < 1) throw std::invalid_argument("build_Q_scaled: n must be >= 1");
  PolyRat u_lin({BigRat(1), BigRat(-2)}, PolyVar::TDirect);
  PolyRat v_lin({BigRat(1), BigRat(2)}, PolyVar::TDirect);
  return cheb_like(u_lin, n) + cheb_like(v_lin, n);
}

}  // namespace glaisher
