#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sc {

// Arithmetic keeps results canonical; two-argument construction does not.
using Rational = mpq_class;

// num/den in lowest terms.
Rational frac(long num, long den);

// Always "num/den", including integers ("3/1"); used by the JSON emitters.
std::string to_fraction_string(const Rational& r);

// Human form: "3", "-1/6".
std::string to_plain_string(const Rational& r);

// Accepts "n", "n/d", with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

Rational factorial(unsigned n);

Rational binomial(unsigned n, unsigned k);

}  // namespace sc
