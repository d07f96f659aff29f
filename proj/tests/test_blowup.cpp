#include "spherecalc/blowup.hpp"

#include <doctest.h>

using namespace sc;

TEST_CASE("moments are j! times the coefficients") {
  BlowupFunctions bf = blowup_functions(16);
  for (int j = 0; j < 16; ++j) {
    CHECK(moments(bf, Kind::B, j) == bf.B[j] * factorial(j));
    CHECK(moments(bf, Kind::S, j) == bf.S[j] * factorial(j));
  }
  CHECK(moments(bf, Kind::B, 4) == PolyX(-2L));
  CHECK(moments(bf, Kind::S, 3) == PolyX::x() * Rational(-1));
}

TEST_CASE("twist patterns") {
  CHECK(twist_patterns(3, 0).size() == 4);
  CHECK(twist_patterns(3, 1).size() == 4);
  for (const auto& tp : twist_patterns(4, 1)) CHECK(tp.parity_sum() % 2 == 1);
  CHECK_THROWS_AS(twist_patterns(25, 0), std::invalid_argument);
}

TEST_CASE("evaluation of single class monomials") {
  const int order = 14;
  BlowupFunctions bf = blowup_functions(order);
  ModelEvaluator ev(bf);
  SeriesT one = SeriesT::constant(PolyX(1L), order);
  FormalExpr e = FormalExpr::exponential({1}, one);
  CHECK(agree(ev.evaluate(e, TwistPattern{{0}}), bf.B));
  CHECK(agree(ev.evaluate(e, TwistPattern{{1}}), bf.S));
  CHECK(agree(ev.evaluate(e.times_class(0), TwistPattern{{0}}), derivative(bf.B)));
  FormalExpr e2 = FormalExpr::exponential({2}, one);
  CHECK(agree(ev.evaluate(e2, TwistPattern{{0}}), series_rescale(bf.B, 2)));
}

TEST_CASE("classes multiply independently") {
  const int order = 14;
  BlowupFunctions bf = blowup_functions(order);
  ModelEvaluator ev(bf);
  SeriesT one = SeriesT::constant(PolyX(1L), order);
  FormalExpr e = FormalExpr::exponential({1, 1}, one);
  CHECK(agree(ev.evaluate(e, TwistPattern{{1, 0}}), bf.S * bf.B));
  CHECK(agree(ev.evaluate(e, TwistPattern{{1, 0}}), ev.evaluate(e, TwistPattern{{0, 1}})));
  CHECK(agree(ev.exp_sigma(TwistPattern{{0, 0}}, false), bf.B * bf.B));
  SeriesT z = ev.exp_sigma(TwistPattern{{1, 0}}, true);
  CHECK(agree(z, derivative(bf.S) * bf.B.truncated(order - 1) -
                     bf.S.truncated(order - 1) * derivative(bf.B)));
  CHECK_THROWS_AS(ev.exp_sigma(TwistPattern{{0}}, true), std::invalid_argument);
}

TEST_CASE("double angle relations as formal relations") {
  const int order = 16;
  BlowupFunctions bf = blowup_functions(order);
  SeriesT one = SeriesT::constant(PolyX(1L), order);
  FormalExpr lhs = FormalExpr::exponential({2}, one);
  FormalExpr rhs = FormalExpr::exponential({0}, pow(bf.B, 4) - pow(bf.S, 4));
  RelationReport even = verify_relation(lhs, rhs, twist_patterns(1, 0), order, bf);
  CHECK(even.ok);
  CHECK(even.patterns_checked == 1);
  FormalExpr rhs_odd = FormalExpr::exponential({0}, bf.Delta * bf.S * bf.B * PolyX(2L)).times_class(0);
  // e * exp(0) has D_w(e) = S_1 = 1 on the twisted class.
  RelationReport odd = verify_relation(lhs, rhs_odd, twist_patterns(1, 1), order, bf);
  CHECK(odd.ok);
  RelationReport wrong = verify_relation(lhs, rhs_odd, twist_patterns(1, 0), order, bf);
  CHECK_FALSE(wrong.ok);
  CHECK_FALSE(wrong.failures.empty());
}
