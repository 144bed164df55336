#include "hyll/real.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace hyll {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("bits_for_digits: digits must be positive");
  // digits*log2(10) rounded up, plus 16 guard bits
  const double bits = static_cast<double>(digits) * 3.3219280948873626;
  return static_cast<mpfr_prec_t>(std::ceil(bits)) + 16;
}

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real::from_string: cannot parse '" + s + "'");
  return r;
}

Real Real::rounded_to(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::binary(BinaryFn fn, const Real& a, const Real& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  Real r(p);
  fn(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

bool Real::identical(const Real& o) const {
  if (precision() != o.precision()) return false;
  if (mpfr_nan_p(v_) || mpfr_nan_p(o.v_)) return false;
  if (mpfr_zero_p(v_) && mpfr_zero_p(o.v_)) return true;
  return mpfr_equal_p(v_, o.v_) != 0;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

std::string Real::roundtrip_string() const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) throw std::domain_error("roundtrip_string: value is not finite");
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
  if (s == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string digits(s);
  mpfr_free_str(s);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // digits represent 0.ddd... * 10^exp; render as d.dd...e(exp-1)
  std::string out = sign + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

std::string Real::fixed_string(int frac_digits) const {
  if (frac_digits < 0) throw std::invalid_argument("fixed_string: negative digit count");
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*R*f", frac_digits, MPFR_RNDN, v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Real::scientific_string(int sig_digits) const {
  if (sig_digits < 1) throw std::invalid_argument("scientific_string: need at least one digit");
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*R*e", sig_digits - 1, MPFR_RNDN, v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace hyll
