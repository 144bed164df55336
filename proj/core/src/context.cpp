#include "hyll/context.hpp"

#include <stdexcept>

namespace hyll {

namespace {

constexpr mpfr_prec_t kConstGuardBits = 64;

}  // namespace

PrecisionContext make_context(int digits, const Rational& k) {
  if (digits < PrecisionContext::kMinDigits)
    throw std::invalid_argument("make_context: digits must be at least 30");
  if (k <= 0) throw std::invalid_argument("make_context: scale k must be positive");

  PrecisionContext ctx;
  ctx.digits_ = digits;
  ctx.prec_ = bits_for_digits(digits);
  ctx.k_ = k;

  // Constants are evaluated with extra guard bits, then rounded once to the
  // working precision, so a recomputation at higher `digits` rounds back to
  // the same cached bits.
  const mpfr_prec_t wide = ctx.prec_ + kConstGuardBits;

  Real gamma_w(wide);
  mpfr_const_euler(gamma_w.raw(), MPFR_RNDN);
  ctx.gamma_ = gamma_w.rounded_to(ctx.prec_);

  Real pi_w(wide);
  mpfr_const_pi(pi_w.raw(), MPFR_RNDN);
  Real pi2_w(wide);
  mpfr_sqr(pi2_w.raw(), pi_w.raw(), MPFR_RNDN);
  ctx.pi_squared_ = pi2_w.rounded_to(ctx.prec_);

  Real ln_k_w(wide);
  if (k == 1) {
    mpfr_set_zero(ln_k_w.raw(), 1);
  } else {
    Real k_w(k, wide);
    mpfr_log(ln_k_w.raw(), k_w.raw(), MPFR_RNDN);
  }
  ctx.ln_k_ = ln_k_w.rounded_to(ctx.prec_);

  Real lambda_w = gamma_w + ln_k_w;
  ctx.lambda_ = lambda_w.rounded_to(ctx.prec_);
  Real lambda2_w(wide);
  mpfr_sqr(lambda2_w.raw(), lambda_w.raw(), MPFR_RNDN);
  ctx.lambda_squared_ = lambda2_w.rounded_to(ctx.prec_);

  Real pi26_w(wide);
  mpfr_div_ui(pi26_w.raw(), pi2_w.raw(), 6, MPFR_RNDN);
  ctx.pi_squared_over_6_ = pi26_w.rounded_to(ctx.prec_);

  return ctx;
}

}  // namespace hyll
