#include "spherecalc/qpoly.hpp"

namespace sc {

bool qpoly_bezout_check(const QPoly& f, const QPoly& g, const QPoly& phi1, const QPoly& phi2,
                        const PolyX& C) {
  QPoly lhs = f * phi1 + g * phi2;
  QPoly rhs(std::vector<PolyX>{C});
  return lhs == rhs;
}

QPoly q_one_minus_q2() { return QPoly({PolyX(1L), PolyX(), PolyX(-1L)}); }

QPoly q_one_minus_xq_plus_q2() { return QPoly({PolyX(1L), -PolyX::x(), PolyX(1L)}); }

QPoly q_two_minus_xq() { return QPoly({PolyX(2L), -PolyX::x()}); }

SeriesT substitute(const QPoly& p, const SeriesT& q) {
  int n = q.order();
  SeriesT acc(n);
  SeriesT power = SeriesT::constant(PolyX(1L), n);
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) power = power * q;
    if (!p[i].is_zero()) acc += power * p[i];
  }
  return acc;
}

std::string qpoly_str(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i].is_zero()) continue;
    std::string c = p[i].str();
    std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
    std::string term;
    if (mono.empty())
      term = c;
    else if (c == "1")
      term = mono;
    else if (c == "-1")
      term = "-" + mono;
    else if (p[i].coeffs().size() > 1 || c.find(' ') != std::string::npos)
      term = "(" + c + ")*" + mono;
    else
      term = c + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

}  // namespace sc
