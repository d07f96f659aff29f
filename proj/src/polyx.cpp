#include "spherecalc/polyx.hpp"

#include <stdexcept>

namespace sc {

namespace {
const Rational kZero(0);
}

PolyX::PolyX(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

PolyX::PolyX(long c) {
  if (c != 0) c_.emplace_back(c);
}

PolyX::PolyX(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyX PolyX::x() { return monomial(Rational(1), 1); }

PolyX PolyX::monomial(const Rational& c, int deg) {
  PolyX p;
  if (c == 0) return p;
  p.c_.assign(deg + 1, Rational(0));
  p.c_[deg] = c;
  return p;
}

const Rational& PolyX::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

void PolyX::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyX& PolyX::operator+=(const PolyX& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyX& PolyX::operator*=(const PolyX& o) {
  *this = *this * o;
  return *this;
}

PolyX& PolyX::operator*=(const Rational& r) {
  if (r == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= r;
  return *this;
}

void PolyX::add_product(const PolyX& a, const PolyX& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < n) c_.resize(n);
  mpq_t tmp;
  mpq_init(tmp);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp, a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      mpq_add(c_[i + j].get_mpq_t(), c_[i + j].get_mpq_t(), tmp);
    }
  }
  mpq_clear(tmp);
  trim();
}

PolyX operator*(const PolyX& a, const PolyX& b) {
  PolyX r;
  r.add_product(a, b);
  return r;
}

PolyX PolyX::operator-() const {
  PolyX r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Rational PolyX::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<PolyX, PolyX> PolyX::divmod(const PolyX& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  PolyX rem = *this;
  if (degree() < d.degree()) return {PolyX(), rem};
  std::vector<Rational> quot(degree() - d.degree() + 1);
  const Rational& lead = d.c_.back();
  for (int i = rem.degree(); i >= d.degree(); --i) {
    Rational f = rem.c_[i] / lead;
    quot[i - d.degree()] = f;
    if (f == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem.c_[i - d.degree() + j] -= f * d.c_[j];
  }
  rem.trim();
  return {PolyX(std::move(quot)), rem};
}

std::string PolyX::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    bool neg = c < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    if (i >= 1) mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace sc
