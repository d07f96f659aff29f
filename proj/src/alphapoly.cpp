#include "spherecalc/alphapoly.hpp"

#include <stdexcept>

namespace sc {

namespace {
const PolyX kZeroPoly;
}

AlphaPoly::AlphaPoly(std::vector<PolyX> coeffs) : c_(std::move(coeffs)) { trim(); }

AlphaPoly AlphaPoly::monomial(const PolyX& c, int deg) {
  if (c.is_zero()) return {};
  std::vector<PolyX> v(deg + 1);
  v[deg] = c;
  return AlphaPoly(std::move(v));
}

const PolyX& AlphaPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return kZeroPoly;
  return c_[i];
}

void AlphaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool AlphaPoly::has_parity(int parity) const {
  for (int j = 0; j <= degree(); ++j)
    if (j % 2 != parity && !c_[j].is_zero()) return false;
  return true;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

AlphaPoly operator*(const AlphaPoly& a, const PolyX& s) {
  AlphaPoly r = a;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PolyX> v(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) v[i + j].add_product(a.c_[i], b.c_[j]);
  return AlphaPoly(std::move(v));
}

bool AlphaPoly::divide_coeffs(const PolyX& d, AlphaPoly& out) const {
  std::vector<PolyX> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    auto [q, r] = c_[i].divmod(d);
    if (!r.is_zero()) return false;
    v[i] = std::move(q);
  }
  out = AlphaPoly(std::move(v));
  return true;
}

PolyX AlphaPoly::apply(const std::vector<PolyX>& moments) const {
  if (degree() >= static_cast<int>(moments.size()))
    throw std::out_of_range("moment table too short for alpha-degree " + std::to_string(degree()));
  PolyX acc;
  for (int j = 0; j <= degree(); ++j)
    if (!c_[j].is_zero()) acc.add_product(c_[j], moments[j]);
  return acc;
}

std::string AlphaPoly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    if (c_[j].is_zero()) continue;
    std::string c = c_[j].str();
    std::string mono = j == 0 ? "" : std::string(var) + (j > 1 ? "^" + std::to_string(j) : "");
    bool compound = c_[j].degree() > 0 && c.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (mono.empty())
      term = compound ? "(" + c + ")" : c;
    else if (c == "1")
      term = mono;
    else if (c == "-1")
      term = "-" + mono;
    else
      term = (compound ? "(" + c + ")" : c) + "*" + mono;
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
