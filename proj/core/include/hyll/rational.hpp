#ifndef HYLL_RATIONAL_HPP
#define HYLL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyll {

// Exact rational arithmetic. mpq_class keeps values canonical
// (denominator > 0, gcd(|num|, den) = 1) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

// H_p = sum_{j=1..p} 1/j, exactly. H_0 = 0.
Rational harmonic(unsigned p);

// H_p^(2) = sum_{j=1..p} 1/j^2, exactly. H_0^(2) = 0.
Rational harmonic2(unsigned p);

// n! as an exact integer.
Integer factorial(unsigned n);

// k^e for integer e (e may be negative; k must be nonzero then).
Rational rational_pow(const Rational& k, long e);

// Parses "7", "-3/4" or a plain decimal like "2.5" into an exact rational.
Rational rational_from_string(const std::string& text);

// Canonical form: "n" when the denominator is 1, else "n/d".
std::string rational_to_string(const Rational& q);

}  // namespace hyll

#endif  // HYLL_RATIONAL_HPP
