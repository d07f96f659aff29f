#include "spherecalc/elliptic.hpp"

#include <stdexcept>

namespace sc {

namespace {

PolyX make_g2() { return PolyX({Rational(-4), Rational(0), frac(4, 3)}); }

PolyX make_g3() { return PolyX({Rational(0), frac(-36, 27), Rational(0), frac(8, 27)}); }

// exp(-x t^2 / 6)
SeriesT gaussian_factor(int order) {
  SeriesT e(order);
  if (order > 2) e.coeff(2) = PolyX::monomial(frac(-1, 6), 1);
  return series_exp(e);
}

IdentityResult compare(const std::string& name, const SeriesT& lhs, const SeriesT& rhs) {
  SeriesT diff = lhs - rhs;
  IdentityResult r;
  r.name = name;
  r.checked_through = diff.order();
  int v = diff.valuation();
  r.ok = v == diff.order();
  if (!r.ok) {
    r.first_bad = v;
    r.residual = diff[v].str();
  }
  return r;
}

}  // namespace

WeierstrassData wp_series(int order) {
  if (order < 8) throw std::invalid_argument("wp_series needs order >= 8");
  WeierstrassData w;
  w.g2 = make_g2();
  w.g3 = make_g3();
  int kmax = (order - 1) / 2;
  w.laurent.assign(kmax + 1, PolyX());
  if (kmax >= 2) w.laurent[2] = w.g2 * frac(1, 20);
  if (kmax >= 3) w.laurent[3] = w.g3 * frac(1, 28);
  for (int k = 4; k <= kmax; ++k) {
    PolyX acc;
    for (int m = 2; m <= k - 2; ++m) acc.add_product(w.laurent[m], w.laurent[k - m]);
    w.laurent[k] = acc * Rational(3, (2 * k + 1) * (k - 3));
  }
  w.wp_times_z2 = SeriesT(order);
  w.wp_times_z2.coeff(0) = PolyX(1L);
  for (int k = 2; k <= kmax; ++k) w.wp_times_z2.coeff(2 * k) = w.laurent[k];

  // With P = z^2 wp: (zP' - 2P)^2 - 4P^3 + g2 z^4 P + g3 z^6 = 0.
  const SeriesT& P = w.wp_times_z2;
  SeriesT zdP(order);
  for (int i = 0; i < order; ++i) zdP.coeff(i) = P[i] * Rational(i);
  SeriesT lhs = zdP - P * PolyX(2L);
  lhs = lhs * lhs;
  SeriesT rhs = P * P * P * PolyX(4L);
  SeriesT z4(order), z6(order);
  if (order > 4) z4.coeff(4) = w.g2;
  if (order > 6) z6.coeff(6) = w.g3;
  SeriesT residual = lhs - rhs + z4 * P + z6;
  if (!residual.is_zero())
    throw std::logic_error("wp recurrence violates its differential equation at z^" +
                           std::to_string(residual.valuation()));
  return w;
}

BlowupFunctions blowup_functions(int order) {
  WeierstrassData w = wp_series(order);
  BlowupFunctions bf;
  bf.order = order;

  SeriesT log_sigma_over_z(order);
  for (int k = 2; 2 * k < order; ++k)
    log_sigma_over_z.coeff(2 * k) = w.laurent[k] * frac(-1, 2 * k * (2 * k - 1));
  SeriesT sigma_over_z = series_exp(log_sigma_over_z);

  SeriesT shifted_root = w.wp_times_z2;  // z^2 (wp - e3), e3 = -x/3
  if (order > 2) shifted_root.coeff(2) += PolyX::monomial(frac(1, 3), 1);
  SeriesT sigma3 = sigma_over_z * series_sqrt(shifted_root);

  SeriesT gauss = gaussian_factor(order);
  bf.S = shift_up(gauss * sigma_over_z, 1).truncated(order);
  bf.B = gauss * sigma3;
  bf.Delta = derivative(bf.S) * bf.B - bf.S * derivative(bf.B);
  bf.Q = bf.S * series_inverse(bf.B);
  bf.q = bf.Q * bf.Q;
  bf.Qprime = derivative(bf.Q);
  return bf;
}

std::vector<IdentityResult> verify_elliptic_identities(const BlowupFunctions& bf) {
  std::vector<IdentityResult> out;
  const PolyX x = PolyX::x();
  const int n = bf.order;
  SeriesT one = SeriesT::constant(PolyX(1L), n);
  SeriesT B2 = bf.B * bf.B, S2 = bf.S * bf.S;
  SeriesT B4 = B2 * B2, S4 = S2 * S2;

  out.push_back(compare("(Q')^2 = 1 - x Q^2 + Q^4", bf.Qprime * bf.Qprime,
                        one - bf.q * x + bf.q * bf.q));
  out.push_back(compare("Delta^2 = B^4 - x S^2 B^2 + S^4", bf.Delta * bf.Delta,
                        B4 - S2 * B2 * x + S4));
  out.push_back(compare("B(2t) = B^4 - S^4", series_rescale(bf.B, 2), B4 - S4));
  out.push_back(compare("S(2t) = 2 Delta S B", series_rescale(bf.S, 2),
                        bf.Delta * bf.S * bf.B * PolyX(2L)));

  IdentityResult lead;
  lead.name = "B^r S^n = t^n + O(t^(n+2)), r,n <= 8";
  lead.ok = true;
  lead.checked_through = n;
  for (unsigned r = 0; r <= 8 && lead.ok; ++r) {
    for (unsigned k = 0; k <= 8 && lead.ok; ++k) {
      SeriesT prod = pow(bf.B, r) * pow(bf.S, k);
      SeriesT tn(n);
      if (static_cast<int>(k) < n) tn.coeff(k) = PolyX(1L);
      SeriesT diff = (prod - tn).truncated(std::min<int>(n, k + 2));
      if (!diff.is_zero()) {
        lead.ok = false;
        lead.first_bad = diff.valuation();
        lead.residual = "r=" + std::to_string(r) + " n=" + std::to_string(k) + ": " +
                        diff[diff.valuation()].str();
      }
    }
  }
  out.push_back(lead);
  return out;
}

}  // namespace sc
