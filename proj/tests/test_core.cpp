#include "spherecalc/qpoly.hpp"
#include "spherecalc/series.hpp"

#include <doctest.h>

using namespace sc;

TEST_CASE("frac canonicalizes and formats") {
  CHECK(frac(2, 2) == 1);
  CHECK(frac(-36, 27) == frac(-4, 3));
  CHECK(to_fraction_string(frac(6, -4)) == "-3/2");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_plain_string(frac(-1, 6)) == "-1/6");
  CHECK_THROWS(frac(1, 0));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-10/4") == frac(-5, 2));
  CHECK(parse_rational("+3/9") == frac(1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("PolyX arithmetic") {
  PolyX x = PolyX::x();
  PolyX f = x * x - PolyX(4L);
  CHECK(f.degree() == 2);
  CHECK(f.str() == "x^2 - 4");
  CHECK(f.eval(Rational(2)) == 0);
  auto [q, r] = f.divmod(x - PolyX(2L));
  CHECK(q == x + PolyX(2L));
  CHECK(r.is_zero());
  CHECK_FALSE(f.divisible_by(x - PolyX(1L)));
  CHECK((f - f).is_zero());
  CHECK(PolyX().degree() == PolyX::kZeroDegree);
  CHECK_THROWS_AS(f.divmod(PolyX()), std::domain_error);
  PolyX acc;
  acc.add_product(x, x);
  CHECK(acc == x * x);
}

TEST_CASE("series inverse, sqrt, exp") {
  const int order = 10;
  SeriesT t = SeriesT::t(order);
  SeriesT one = SeriesT::constant(PolyX(1L), order);
  SeriesT f = one - t * PolyX::x();
  SeriesT inv = series_inverse(f);
  for (int i = 0; i < order; ++i) CHECK(inv[i] == PolyX::monomial(1, i));
  SeriesT g = one + t;
  SeriesT r = series_sqrt(g * g);
  CHECK(agree(r, g));
  SeriesT e = series_exp(t);
  for (int i = 0; i < order; ++i) CHECK(e[i] == PolyX(1 / factorial(i)));
  CHECK_THROWS_AS(series_inverse(t), std::domain_error);
  CHECK_THROWS(series_exp(one));
}

TEST_CASE("series rescale, derivative, shift, parts") {
  SeriesT e = series_exp(SeriesT::t(8));
  SeriesT e2 = series_rescale(e, 2);
  CHECK(agree(e2, e * e));
  CHECK(agree(derivative(e), e));
  CHECK(derivative(e).order() == 7);
  SeriesT s = shift_up(e, 2);
  CHECK(s.order() == 10);
  CHECK(s.valuation() == 2);
  CHECK(agree(e.even_part() + e.odd_part(), e));
  CHECK(agree(pow(e, 3), series_rescale(e, 3)));
}

TEST_CASE("qpoly divmod keeps coefficients integral") {
  QPoly f = q_one_minus_q2();
  QPoly g({PolyX(1L), PolyX::x(), PolyX(3L), PolyX(5L)});
  auto [quot, rem] = qpoly_divmod(g, f);
  CHECK(quot * f + rem == g);
  CHECK(rem.degree() < f.degree());
  QPoly h = qpoly_exact_div(g * f, f);
  CHECK(h == g);
  CHECK_THROWS_AS(qpoly_exact_div(g, f), std::domain_error);
  CHECK_THROWS_AS(qpoly_divmod(g, q_two_minus_xq()), std::invalid_argument);
}

TEST_CASE("Bezout identities of the induction steps") {
  PolyX x = PolyX::x();
  QPoly f = q_one_minus_q2();
  QPoly g1 = q_one_minus_xq_plus_q2();
  QPoly phi1({x * x - PolyX(2L), -x});
  QPoly phi2({PolyX(-2L), -x});
  CHECK(qpoly_bezout_check(f, g1, phi1, phi2, x * x - PolyX(4L)));
  QPoly f2 = f * f;
  QPoly psi1({x * x - PolyX(1L), -x});
  QPoly psi2({PolyX(-3L), PolyX(-2L) * x, PolyX(1L), x});
  CHECK(qpoly_bezout_check(f2, g1, psi1, psi2, x * x - PolyX(4L)));
  CHECK_FALSE(qpoly_bezout_check(f, g1, phi2, phi1, x * x - PolyX(4L)));
}

TEST_CASE("qpoly printing") {
  CHECK(qpoly_str(q_one_minus_q2()) == "1 - q^2");
}
