#include "hyll/rational.hpp"

namespace hyll {

Rational harmonic(unsigned p) {
  Rational h(0);
  for (unsigned j = 1; j <= p; ++j) h += Rational(1, j);
  return h;
}

Rational harmonic2(unsigned p) {
  Rational h(0);
  for (unsigned j = 1; j <= p; ++j) {
    Rational term(1, j);
    term /= j;
    h += term;
  }
  return h;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational rational_pow(const Rational& k, long e) {
  if (e == 0) return Rational(1);
  if (k == 0) throw std::domain_error("rational_pow: zero base with nonzero exponent");
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), k.get_num_mpz_t(), mag);
  mpz_pow_ui(r.get_den_mpz_t(), k.get_den_mpz_t(), mag);
  r.canonicalize();
  if (e < 0) return Rational(1) / r;
  return r;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational_from_string: empty string");
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point out
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const size_t frac_len = text.size() - dot - 1;
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("rational_from_string: zero denominator");
  return r;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace hyll
