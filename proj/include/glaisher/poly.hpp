#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glaisher/cxmath.hpp"

namespace glaisher {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

double rat_to_double(const BigRat& r);

// "p/q" in lowest terms, "p" when the denominator is 1.
std::string rat_to_string(const BigRat& r);

// Accepts "p", "p/q" and plain decimals such as "0.5" or "-2.25".
BigRat rat_parse(const std::string& s);

// Which variable the coefficients are indexed by: x = t^2 for the Lemma 1/4
// polynomials, t itself for the Lemma 5 family.
enum class PolyVar { XEqualsTSquared, TDirect };

// Dense polynomial over exact rationals, coefficients in ascending powers.
// Trailing zero coefficients are always stripped, so degree() is exact.
class PolyRat {
 public:
  PolyRat(std::vector<BigRat> coeffs, PolyVar var);
  static PolyRat zero(PolyVar var) { return PolyRat({BigRat(0)}, var); }
  static PolyRat constant(BigRat c, PolyVar var) { return PolyRat({std::move(c)}, var); }

  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  PolyVar var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  BigRat operator()(const BigRat& x) const;  // exact Horner
  Cx operator()(Cx x) const;                 // binary64 Horner

  PolyRat derivative() const;
  double max_abs_coeff() const;

  friend PolyRat operator+(const PolyRat& p, const PolyRat& q);
  friend PolyRat operator-(const PolyRat& p, const PolyRat& q);
  friend PolyRat operator*(const PolyRat& p, const PolyRat& q);
  friend PolyRat operator*(const BigRat& c, const PolyRat& p);

 private:
  std::vector<BigRat> coeffs_;
  PolyVar var_;
};

// cos(2n asin(sqrt x)) + cosh(2n asinh(sqrt x / a)) as a polynomial in
// x = t^2, built from the coupled three-term recurrences
//   u_0 = 1, u_1 = 1-2x,      u_{m+1} = 2(1-2x) u_m     - u_{m-1}
//   v_0 = 1, v_1 = 1+2x/a^2,  v_{m+1} = 2(1+2x/a^2) v_m - v_{m-1}.
// Degree n except at a = 1 with n odd, where the leading terms cancel.
PolyRat build_Q_lemma1(int n, const BigRat& a);

// 2n sin(n asin t) sinh(n asinh(t/a)) / t^2 as a polynomial in x = t^2;
// n must be odd. Degree exactly n-1.
PolyRat build_P_lemma1(int n, const BigRat& a);

struct Lemma4Result {
  BigRat constant;    // C = ((-1)^{n/2} / 2) a^n / (1 + a^{2n})
  PolyRat remainder;  // R_{n-1}(x) = cos(n asin t) cosh(n asinh(t/a)) - C Q_n(x)
};

// n must be even. degree(remainder) <= n-1 by construction of C.
Lemma4Result build_R_lemma4(int n, const BigRat& a);

// cos(2n asin(sqrt t)) + cosh(2n asinh(sqrt t)) as a polynomial in t itself:
// the a = 1 recurrences with x read as t. Even polynomial of degree
// 2 floor(n/2); the odd-power coefficients of u_n + v_n cancel exactly.
PolyRat build_Q_scaled(int n);

}  // namespace glaisher
