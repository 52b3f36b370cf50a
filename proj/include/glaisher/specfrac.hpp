#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glaisher/cxmath.hpp"
#include "glaisher/poly.hpp"

namespace glaisher {

// Principal-branch decompositions asin(sqrt x_j) = xi - i eta,
// asinh(sqrt x_j) = phi - i psi with all four entries positive.
struct BranchData {
  double xi, eta, phi, psi;
};

struct RootData {
  int j = 0;
  double theta = 0.0;  // pi (2j-1) / (2n)
  Cx x{0.0, 0.0};      // pole; x = t^2 plane for Lemma 1/4, t plane for Lemma 5
  Cx y{0.0, 0.0};      // Lemma 5 partner pole -x
  std::optional<BranchData> branch;
  int sign_mu = 1;
  int sign_nu = 1;
  bool degenerate = false;  // pole escaped to infinity; x reported as inf
};

enum class PFFamily { Lemma1, Lemma4, Lemma5 };

struct PFTerm {
  Cx pole;
  Cx residue;
};

struct PFExpansion {
  PFFamily family;
  int n = 0;
  Cx a{1.0, 0.0};
  int k = 0;
  Cx constant{0.0, 0.0};  // Lemma 4 C, or a Lemma 1 degenerate term
  std::vector<PFTerm> terms;
  std::vector<std::string> notes;

  // constant + sum residue / (v - pole); pass v = t^2 for Lemma 1/4, v = t
  // for Lemma 5.
  Cx eval(Cx v) const;
};

// x_j = a^2 sin^2(theta_j) / (a^2 - 1 + 2 i a cos(theta_j)). The root is
// degenerate when the denominator vanishes (a = 1, cos theta_j = 0).
RootData roots_lemma1(int n, Cx a, int j);

// Measures the sign pair in cosh(n asinh(sqrt(x_j)/a)) = mu sin(n asin sqrt(x_j)),
// cos(n asin sqrt(x_j)) = i nu sinh(n asinh(sqrt(x_j)/a)). Throws if either
// ratio is not +-1 to 1e-9 relative. mu always equals (-1)^{j-1}; nu matches
// it for cos(theta_j) >= 0 and flips sign for cos(theta_j) < 0.
std::pair<int, int> verify_signs(int n, double a, int j);

// The n-term expansion of 2n sin(n asin t) sinh(n asinh(t/a)) /
// (t^2 (cos(2n asin t) + cosh(2n asinh(t/a)))) over x = t^2. A degenerate
// root contributes a finite constant instead of a pole/residue term.
// Complex a is accepted for evaluation (the a = i substitution trick).
PFExpansion expansion_lemma1(int n, Cx a);

// C + n-term expansion of cos(n asin t) cosh(n asinh(t/a)) /
// (cos(2n asin t) + cosh(2n asinh(t/a))) over x = t^2, n even.
PFExpansion expansion_lemma4(int n, double a);

// Pure-imaginary pole pair x_j = -i sin^2(theta_j)/(2 cos(theta_j)),
// y_j = -x_j, with certified branch data (1 <= j <= floor(n/2)).
RootData roots_lemma5(int n, int j);

// Expansion of t^{2k} / (cos(2n asin sqrt t) + cosh(2n asinh sqrt t)) in the
// t plane; residues from the exact polynomial derivative x_j^{2k}/Q'(x_j).
PFExpansion expansion_lemma5(int n, int k);

struct Lemma5Routes {
  // Per-j coefficient of the paired term 1/(4t^2 + sin^4/cos^2), computed
  // two independent ways.
  std::vector<Cx> statement;        // closed form from the expansion display
  std::vector<Cx> from_derivative;  // 8 x_j^{2k+1} / Q'(x_j), exact Q'
  double max_rel_diff = 0.0;
  // Ratio exact Q'(x_j) / displayed closed form for Q'(x_j); the displayed
  // intermediate is inconsistent (the ratio is not 1 and varies with j).
  std::vector<double> qprime_display_ratio;
};

Lemma5Routes lemma5_residue_routes(int n, int k);

// Transcendental left-hand sides reproduced by the expansions.
Cx lemma1_lhs(int n, Cx a, double t);
Cx lemma4_lhs(int n, double a, double t);
double lemma5_lhs(int n, int k, double t);

}  // namespace glaisher
