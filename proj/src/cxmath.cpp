#include "glaisher/cxmath.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace glaisher {

void throw_non_finite(const char* where, Cx z) {
  throw std::domain_error(std::string(where) + ": non-finite value (" +
                          std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
}

Cx casin(Cx z) {
  require_finite(z, "casin");
  return std::asin(z);
}

Cx casinh(Cx z) {
  require_finite(z, "casinh");
  return std::asinh(z);
}

Cx alpha(Cx z, int n) {
  if (n < 1) throw std::invalid_argument("alpha: n must be a positive integer");
  require_finite(z, "alpha");
  const double scale = std::numbers::pi / (2.0 * n);
  Cx s = std::sin(scale * z);
  require_finite(s, "alpha");
  return 2.0 * n * casinh(s);
}

double y_star(int n) {
  if (n < 1) throw std::invalid_argument("y_star: n must be a positive integer");
  static const double y1 = 2.0 * kLog1pSqrt2 / std::numbers::pi;
  return n * y1;
}

}  // namespace glaisher
