#pragma once

#include "spherecalc/polyx.hpp"
#include "spherecalc/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sc {

// Polynomial in the symbol q. Coef is PolyX for the identities of the
// exact divisions and AlphaPoly for structure-equation payloads.
template <class Coef>
class QPolyOver {
 public:
  QPolyOver() = default;
  explicit QPolyOver(std::vector<Coef> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coef>& coeffs() const { return c_; }
  Coef operator[](int i) const { return (i < 0 || i > degree()) ? Coef() : c_[i]; }

  QPolyOver& operator+=(const QPolyOver& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPolyOver& operator-=(const QPolyOver& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPolyOver operator+(QPolyOver a, const QPolyOver& b) { return a += b; }
  friend QPolyOver operator-(QPolyOver a, const QPolyOver& b) { return a -= b; }
  friend bool operator==(const QPolyOver& a, const QPolyOver& b) { return a.c_ == b.c_; }

  QPolyOver scaled(const PolyX& s) const {
    QPolyOver r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  // Multiply by q^k.
  QPolyOver shifted(int k) const {
    std::vector<Coef> v(k, Coef());
    v.insert(v.end(), c_.begin(), c_.end());
    return QPolyOver(std::move(v));
  }

  // Drop the constant term and divide by q; caller checks the constant term.
  QPolyOver div_q() const {
    if (c_.empty()) return *this;
    return QPolyOver(std::vector<Coef>(c_.begin() + 1, c_.end()));
  }

  QPolyOver truncated(int terms) const {
    if (terms <= 0) return QPolyOver();
    if (terms >= static_cast<int>(c_.size())) return *this;
    return QPolyOver(std::vector<Coef>(c_.begin(), c_.begin() + terms));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Coef> c_;
};

using QPoly = QPolyOver<PolyX>;

// Product of a payload with a q-polynomial over Q[x].
template <class Coef>
QPolyOver<Coef> operator*(const QPolyOver<Coef>& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coef> v(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) v[i + j] += a[i] * b[j];
  return QPolyOver<Coef>(std::move(v));
}

// Both the constant and the leading coefficient are the rationals +1 or -1.
inline bool is_doubly_monic(const QPoly& f) {
  if (f.is_zero()) return false;
  auto unit = [](const PolyX& c) {
    return c.is_constant() && !c.is_zero() && (c[0] == 1 || c[0] == -1);
  };
  return unit(f[0]) && unit(f[f.degree()]);
}

template <class Coef>
struct QDivision {
  QPolyOver<Coef> quotient;
  QPolyOver<Coef> remainder;
};

// Long division by a doubly monic divisor: no denominators are introduced,
// so the quotient stays over the coefficient ring.
template <class Coef>
QDivision<Coef> qpoly_divmod(const QPolyOver<Coef>& g, const QPoly& f) {
  if (!is_doubly_monic(f)) throw std::invalid_argument("divisor is not doubly monic");
  int df = f.degree();
  if (g.degree() < df) return {QPolyOver<Coef>(), g};
  std::vector<Coef> rem = g.coeffs();
  std::vector<Coef> quot(g.degree() - df + 1);
  const Rational lead = f[df][0];
  for (int i = g.degree(); i >= df; --i) {
    Coef factor = rem[i] * PolyX(Rational(1 / lead));
    quot[i - df] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= df; ++j) rem[i - df + j] -= factor * f[j];
  }
  return {QPolyOver<Coef>(std::move(quot)), QPolyOver<Coef>(std::move(rem))};
}

// Exact division with a degree bound: if
// deg g = k + deg f then the quotient has degree <= k.
template <class Coef>
QPolyOver<Coef> qpoly_exact_div(const QPolyOver<Coef>& g, const QPoly& f) {
  auto [quot, rem] = qpoly_divmod(g, f);
  if (!rem.is_zero()) throw std::domain_error("division not exact");
  if (!g.is_zero() && quot.degree() > g.degree() - f.degree())
    throw std::logic_error("quotient exceeds degree bound");
  return quot;
}

// f*phi1 + g*phi2 == C exactly.
bool qpoly_bezout_check(const QPoly& f, const QPoly& g, const QPoly& phi1, const QPoly& phi2,
                        const PolyX& C);

// The divisors and Bezout partners of the induction steps.
QPoly q_one_minus_q2();         // 1 - q^2
QPoly q_one_minus_xq_plus_q2();  // 1 - x q + q^2
QPoly q_two_minus_xq();          // 2 - x q

// Substitute a series for q.
SeriesT substitute(const QPoly& p, const SeriesT& q);

std::string qpoly_str(const QPoly& p);

}  // namespace sc
