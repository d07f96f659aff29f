#pragma once

#include "spherecalc/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sc {

// Dense polynomial in the point class x over Q.
class PolyX {
 public:
  // Degree reported for the zero polynomial. Compares below every real degree.
  static constexpr int kZeroDegree = -1;

  PolyX() = default;
  PolyX(const Rational& c);  // NOLINT(google-explicit-constructor)
  PolyX(long c);             // NOLINT(google-explicit-constructor)
  explicit PolyX(std::vector<Rational> coeffs);

  static PolyX x();
  static PolyX monomial(const Rational& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& operator[](int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  PolyX& operator+=(const PolyX& o);
  PolyX& operator-=(const PolyX& o);
  PolyX& operator*=(const PolyX& o);
  PolyX& operator*=(const Rational& r);

  // this += a*b without temporaries; the hot loop of series multiplication.
  void add_product(const PolyX& a, const PolyX& b);

  PolyX operator-() const;
  friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
  friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
  friend PolyX operator*(const PolyX& a, const PolyX& b);
  friend PolyX operator*(PolyX a, const Rational& r) { return a *= r; }
  friend PolyX operator*(const Rational& r, PolyX a) { return a *= r; }
  friend bool operator==(const PolyX& a, const PolyX& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyX& a, const PolyX& b) { return !(a == b); }

  Rational eval(const Rational& x) const;

  // Euclidean division over Q. Throws std::domain_error on a zero divisor.
  std::pair<PolyX, PolyX> divmod(const PolyX& d) const;
  bool divisible_by(const PolyX& d) const { return divmod(d).second.is_zero(); }

  // "x^2 - 3", "1/15*x^2 - 1/5"; "0" for zero.
  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace sc
