#include "spherecalc/elliptic.hpp"

#include <doctest.h>

using namespace sc;

namespace {

// Weierstrass sigma through z^9 from its classical expansion in g2, g3.
SeriesT sigma_oracle(const PolyX& g2, const PolyX& g3, int order) {
  SeriesT s(order);
  s.coeff(1) = PolyX(1L);
  s.coeff(5) = g2 * frac(-1, 240);
  s.coeff(7) = g3 * frac(-1, 840);
  s.coeff(9) = g2 * g2 * frac(-1, 161280);
  return s;
}

}  // namespace

TEST_CASE("invariants of the Weierstrass data") {
  WeierstrassData w = wp_series(12);
  PolyX x = PolyX::x();
  CHECK(w.g2 == (x * x * frac(1, 3) - PolyX(1L)) * PolyX(4L));
  CHECK(w.g3 == (x * x * x * PolyX(8L) - x * PolyX(36L)) * frac(1, 27));
  CHECK(w.wp_times_z2[0] == PolyX(1L));
  CHECK(w.wp_times_z2[2].is_zero());
  CHECK(w.wp_times_z2[4] == w.g2 * frac(1, 20));
  CHECK(w.wp_times_z2[6] == w.g3 * frac(1, 28));
}

TEST_CASE("S agrees with exp(-x t^2/6) sigma") {
  const int order = 11;
  BlowupFunctions bf = blowup_functions(order);
  WeierstrassData w = wp_series(order);
  SeriesT t2 = SeriesT::t(order) * SeriesT::t(order);
  SeriesT damp = series_exp(t2 * (PolyX::x() * frac(-1, 6)));
  SeriesT oracle = damp * sigma_oracle(w.g2, w.g3, order);
  for (int i = 0; i < order; ++i) CHECK_MESSAGE(bf.S[i] == oracle[i], "t^" << i);
}

TEST_CASE("low order normalization") {
  BlowupFunctions bf = blowup_functions(12);
  CHECK(bf.B[0] == PolyX(1L));
  CHECK(bf.B[2].is_zero());
  CHECK(bf.S[1] == PolyX(1L));
  CHECK(bf.S[3] == PolyX::x() * frac(-1, 6));
  CHECK(bf.Q[3] == PolyX::x() * frac(-1, 6));
  CHECK(bf.q[2] == PolyX(1L));
  CHECK(agree(bf.Q * bf.B, bf.S));
  CHECK(agree(bf.q, bf.Q * bf.Q));
}

TEST_CASE("identities hold at several orders") {
  for (int order : {8, 16, 24, 40}) {
    for (const auto& r : verify_elliptic_identities(blowup_functions(order))) {
      INFO(r.name << " at order " << order << ": " << r.residual);
      CHECK(r.ok);
      CHECK(r.first_bad == -1);
      CHECK(r.checked_through > 0);
    }
  }
}

TEST_CASE("a perturbed B is caught") {
  BlowupFunctions bf = blowup_functions(16);
  bf.B.coeff(6) += PolyX(1L);
  bool any_failed = false;
  for (const auto& r : verify_elliptic_identities(bf))
    if (!r.ok) any_failed = true;
  CHECK(any_failed);
}
