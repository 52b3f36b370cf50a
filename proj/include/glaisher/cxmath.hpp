#pragma once

#include <complex>
#include <stdexcept>

namespace glaisher {

using Cx = std::complex<double>;

// ln(1 + sqrt(2)) = asinh(1)
inline constexpr double kLog1pSqrt2 = 0.8813735870195430252326093249797923;

[[noreturn]] void throw_non_finite(const char* where, Cx z);

inline void require_finite(Cx z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw_non_finite(where, z);
}

// Principal branch of arcsine: Re in [-pi/2, pi/2], cuts on (-inf,-1) and
// (1,inf), continuous from above the cut. Rejects non-finite input.
Cx casin(Cx z);

// Principal branch of inverse hyperbolic sine: Im in [-pi/2, pi/2], cuts on
// the imaginary axis beyond +-i, continuous from the right of the cut.
Cx casinh(Cx z);

// alpha_z = 2n asinh(sin(pi z / (2n))). Real for real z; purely imaginary on
// the segment [0, i y_star(n)].
Cx alpha(Cx z, int n);

// The y with alpha(i y, n) = i pi n, namely (2n/pi) ln(1+sqrt(2)).
// Linear in n: y_star(n) == n * y_star(1) holds exactly.
double y_star(int n);

}  // namespace glaisher
