#pragma once

#include "spherecalc/series.hpp"

#include <string>
#include <vector>

namespace sc {

struct WeierstrassData {
  PolyX g2;
  PolyX g3;
  SeriesT wp_times_z2;         // z^2 * wp(z), even, constant term 1
  std::vector<PolyX> laurent;  // laurent[k] multiplies z^{2k}; entries 0, 1 are zero
};

// Laurent recurrence for wp with g2 = 4(x^2/3 - 1), g3 = (8x^3 - 36x)/27.
// The differential equation is checked on the result before returning.
WeierstrassData wp_series(int order);

struct BlowupFunctions {
  int order = 0;
  SeriesT B, S, Delta, Q, q, Qprime;
};

// B = exp(-x t^2/6) sigma_3 and S = exp(-x t^2/6) sigma, with
// sigma_3 = sigma * sqrt(wp + x/3); Q = S/B.
BlowupFunctions blowup_functions(int order);

struct IdentityResult {
  std::string name;
  bool ok = false;
  int checked_through = 0;  // coefficients t^0 .. t^{checked_through-1} compared
  int first_bad = -1;       // first nonzero residual index, -1 if none
  std::string residual;     // the offending coefficient, empty if ok
};

// (Q')^2 = 1 - xQ^2 + Q^4, Delta^2 = B^4 - xS^2B^2 + S^4, B(2t) = B^4 - S^4,
// S(2t) = 2 Delta S B, and B^r S^n = t^n + O(t^{n+2}) for r, n <= 8.
std::vector<IdentityResult> verify_elliptic_identities(const BlowupFunctions& bf);

}  // namespace sc
