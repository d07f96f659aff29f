#pragma once

#include "spherecalc/polyx.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sc {

// Polynomial in a surface class alpha with coefficients in Q[x].
class AlphaPoly {
 public:
  AlphaPoly() = default;
  explicit AlphaPoly(std::vector<PolyX> coeffs);

  static AlphaPoly monomial(const PolyX& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const PolyX& operator[](int i) const;
  const std::vector<PolyX>& coeffs() const { return c_; }

  // Only powers of the given parity (0 even, 1 odd) occur.
  bool has_parity(int parity) const;

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  AlphaPoly operator-() const;

  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const PolyX& s);
  friend AlphaPoly operator*(const PolyX& s, const AlphaPoly& a) { return a * s; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AlphaPoly& a, const AlphaPoly& b) { return !(a == b); }

  // Every coefficient divisible by d; the quotient is written to out.
  bool divide_coeffs(const PolyX& d, AlphaPoly& out) const;

  // Apply a linear functional given by its values on alpha^j.
  PolyX apply(const std::vector<PolyX>& moments) const;

  std::string str(std::string_view var = "alpha") const;

 private:
  void trim();
  std::vector<PolyX> c_;
};

}  // namespace sc
