#pragma once

#include "spherecalc/polyx.hpp"

#include <string>
#include <vector>

namespace sc {

// Truncated power series in t with PolyX coefficients. Coefficients of t^0 ..
// t^{order-1} are known; everything from t^order on is unknown.
class SeriesT {
 public:
  SeriesT() = default;
  explicit SeriesT(int order);
  explicit SeriesT(std::vector<PolyX> coeffs);

  static SeriesT constant(const PolyX& c, int order);
  static SeriesT t(int order);  // the variable itself

  int order() const { return static_cast<int>(c_.size()); }
  const PolyX& operator[](int i) const { return c_.at(i); }
  PolyX& coeff(int i) { return c_.at(i); }
  const std::vector<PolyX>& coeffs() const { return c_; }

  // Index of the first nonzero coefficient; order() when all known ones vanish.
  int valuation() const;
  bool is_zero() const { return valuation() == order(); }

  SeriesT truncated(int order) const;
  SeriesT even_part() const;
  SeriesT odd_part() const;

  SeriesT& operator+=(const SeriesT& o);
  SeriesT& operator-=(const SeriesT& o);
  SeriesT& operator*=(const PolyX& p);
  SeriesT operator-() const;

  friend SeriesT operator+(SeriesT a, const SeriesT& b) { return a += b; }
  friend SeriesT operator-(SeriesT a, const SeriesT& b) { return a -= b; }
  friend SeriesT operator*(const SeriesT& a, const SeriesT& b);
  friend SeriesT operator*(SeriesT a, const PolyX& p) { return a *= p; }
  friend SeriesT operator*(const PolyX& p, SeriesT a) { return a *= p; }

  // Coefficient-wise equality through min(order) - 1.
  friend bool agree(const SeriesT& a, const SeriesT& b);

  std::string str(std::string_view var = "t") const;

 private:
  std::vector<PolyX> c_;
};

// f * g = 1 + O(t^order). Throws std::domain_error("series not a unit").
SeriesT series_inverse(const SeriesT& f);

// Principal branch: constant term +1. Throws unless f(0) = 1.
SeriesT series_sqrt(const SeriesT& f);

// exp(f) for f(0) = 0. Throws otherwise.
SeriesT series_exp(const SeriesT& f);

// f(c t): coefficient n scales by c^n.
SeriesT series_rescale(const SeriesT& f, long c);

// d/dt; the result loses one order.
SeriesT derivative(const SeriesT& f);

// t^k f; the result gains k orders.
SeriesT shift_up(const SeriesT& f, int k);

SeriesT pow(const SeriesT& f, unsigned k);

}  // namespace sc
