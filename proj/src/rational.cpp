#include "spherecalc/rational.hpp"

#include <stdexcept>
#include <vector>

namespace sc {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_plain_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string str(s);
  auto slash = str.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + str);
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + str);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + str);
  };
  if (slash == std::string::npos) {
    check_int(str);
    return Rational(mpz_class(str[0] == '+' ? str.substr(1) : str));
  }
  std::string num = str.substr(0, slash), den = str.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + str);
  Rational r(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  r.canonicalize();
  return r;
}

Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace sc
