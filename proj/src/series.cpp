#include "spherecalc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc {

SeriesT::SeriesT(int order) : c_(std::max(order, 0)) {}

SeriesT::SeriesT(std::vector<PolyX> coeffs) : c_(std::move(coeffs)) {}

SeriesT SeriesT::constant(const PolyX& c, int order) {
  SeriesT s(order);
  if (order > 0) s.c_[0] = c;
  return s;
}

SeriesT SeriesT::t(int order) {
  SeriesT s(order);
  if (order > 1) s.c_[1] = PolyX(1L);
  return s;
}

int SeriesT::valuation() const {
  for (int i = 0; i < order(); ++i)
    if (!c_[i].is_zero()) return i;
  return order();
}

SeriesT SeriesT::truncated(int order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
  return SeriesT(std::vector<PolyX>(c_.begin(), c_.begin() + order));
}

SeriesT SeriesT::even_part() const {
  SeriesT r = *this;
  for (int i = 1; i < order(); i += 2) r.c_[i] = PolyX();
  return r;
}

SeriesT SeriesT::odd_part() const {
  SeriesT r = *this;
  for (int i = 0; i < order(); i += 2) r.c_[i] = PolyX();
  return r;
}

SeriesT& SeriesT::operator+=(const SeriesT& o) {
  c_.resize(std::min(order(), o.order()));
  for (int i = 0; i < order(); ++i) c_[i] += o.c_[i];
  return *this;
}

SeriesT& SeriesT::operator-=(const SeriesT& o) {
  c_.resize(std::min(order(), o.order()));
  for (int i = 0; i < order(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SeriesT& SeriesT::operator*=(const PolyX& p) {
  for (auto& c : c_) c = c * p;
  return *this;
}

SeriesT SeriesT::operator-() const {
  SeriesT r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

SeriesT operator*(const SeriesT& a, const SeriesT& b) {
  int n = std::min(a.order(), b.order());
  SeriesT r(n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) r.c_[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return r;
}

bool agree(const SeriesT& a, const SeriesT& b) {
  int n = std::min(a.order(), b.order());
  for (int i = 0; i < n; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::string SeriesT::str(std::string_view var) const {
  std::string out;
  for (int i = 0; i < order(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].str();
    bool compound = c_[i].degree() > 0 && coef.find_first_of("+-", 1) != std::string::npos;
    std::string mono = i == 0 ? "" : std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    std::string term;
    if (mono.empty())
      term = compound ? "(" + coef + ")" : coef;
    else if (coef == "1")
      term = mono;
    else if (coef == "-1")
      term = "-" + mono;
    else
      term = (compound ? "(" + coef + ")" : coef) + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  if (out.empty()) out = "0";
  return out + " + O(" + std::string(var) + "^" + std::to_string(order()) + ")";
}

SeriesT series_inverse(const SeriesT& f) {
  int n = f.order();
  if (n == 0) return f;
  const PolyX& c0 = f[0];
  if (c0.is_zero() || !c0.is_constant()) throw std::domain_error("series not a unit");
  Rational inv0 = 1 / c0[0];
  SeriesT r(n);
  r.coeff(0) = PolyX(inv0);
  for (int k = 1; k < n; ++k) {
    PolyX acc;
    for (int j = 1; j <= k; ++j) acc.add_product(f[j], r[k - j]);
    r.coeff(k) = acc * Rational(-inv0);
  }
  return r;
}

SeriesT series_sqrt(const SeriesT& f) {
  int n = f.order();
  if (n == 0) return f;
  if (f[0] != PolyX(1L)) throw std::domain_error("series_sqrt needs constant term 1");
  SeriesT r(n);
  r.coeff(0) = PolyX(1L);
  const Rational half(1, 2);
  for (int k = 1; k < n; ++k) {
    PolyX acc = f[k];
    PolyX cross;
    for (int j = 1; j < k; ++j) cross.add_product(r[j], r[k - j]);
    acc -= cross;
    r.coeff(k) = acc * half;
  }
  return r;
}

SeriesT series_exp(const SeriesT& f) {
  int n = f.order();
  if (n == 0) return f;
  if (!f[0].is_zero()) throw std::domain_error("series_exp needs zero constant term");
  SeriesT r(n);
  r.coeff(0) = PolyX(1L);
  for (int k = 1; k < n; ++k) {
    PolyX acc;
    for (int j = 1; j <= k; ++j) {
      if (f[j].is_zero()) continue;
      acc.add_product(f[j] * Rational(j), r[k - j]);
    }
    r.coeff(k) = acc * frac(1, k);
  }
  return r;
}

SeriesT series_rescale(const SeriesT& f, long c) {
  SeriesT r = f;
  mpz_class scale = 1;
  for (int i = 0; i < f.order(); ++i) {
    if (i > 0) scale *= c;
    r.coeff(i) *= Rational(scale);
  }
  return r;
}

SeriesT derivative(const SeriesT& f) {
  if (f.order() == 0) return f;
  SeriesT r(f.order() - 1);
  for (int i = 1; i < f.order(); ++i) r.coeff(i - 1) = f[i] * Rational(i);
  return r;
}

SeriesT shift_up(const SeriesT& f, int k) {
  SeriesT r(f.order() + k);
  for (int i = 0; i < f.order(); ++i) r.coeff(i + k) = f[i];
  return r;
}

SeriesT pow(const SeriesT& f, unsigned k) {
  SeriesT result = SeriesT::constant(PolyX(1L), f.order());
  SeriesT base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace sc
