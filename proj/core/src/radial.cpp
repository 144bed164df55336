#include "hyll/radial.hpp"

namespace hyll {

ExactValue& ExactValue::operator+=(const ExactValue& o) {
  c_one += o.c_one;
  c_lam += o.c_lam;
  c_lam2 += o.c_lam2;
  c_pi26 += o.c_pi26;
  return *this;
}

ExactValue& ExactValue::add_scaled(const Rational& c, const ExactValue& o) {
  c_one += c * o.c_one;
  c_lam += c * o.c_lam;
  c_lam2 += c * o.c_lam2;
  c_pi26 += c * o.c_pi26;
  return *this;
}

Real ExactValue::realize(const PrecisionContext& ctx) const {
  return realize_with(ctx.lambda(), ctx.lambda_squared(), ctx.pi_squared_over_6(), ctx.prec());
}

Real ExactValue::realize_with(const Real& lambda, const Real& lambda_squared,
                              const Real& pi_squared_over_6, mpfr_prec_t prec) const {
  Real acc(c_one, prec);
  if (c_lam != 0) acc.add_product(Real(c_lam, prec), lambda);
  if (c_lam2 != 0) acc.add_product(Real(c_lam2, prec), lambda_squared);
  if (c_pi26 != 0) acc.add_product(Real(c_pi26, prec), pi_squared_over_6);
  return acc;
}

namespace {

ExactValue radial_from_parts(const Rational& prefactor, int a, int q) {
  ExactValue v;
  switch (q) {
    case 0:
      v.c_one = prefactor;
      break;
    case 1: {
      const Rational h = harmonic(static_cast<unsigned>(a));
      v.c_one = prefactor * h;
      v.c_lam = -prefactor;
      break;
    }
    case 2: {
      const Rational h = harmonic(static_cast<unsigned>(a));
      const Rational h2 = harmonic2(static_cast<unsigned>(a));
      v.c_one = prefactor * (h * h - h2);
      v.c_lam = Rational(-2) * prefactor * h;
      v.c_lam2 = prefactor;
      v.c_pi26 = prefactor;
      break;
    }
    default:
      throw std::domain_error("radial_integral: ln power out of range");
  }
  return v;
}

}  // namespace

ExactValue radial_integral_exact(int a, int q, const Rational& k) {
  if (a < 0)
    throw DivergentIntegral("radial_integral: net s power " + std::to_string(a) +
                            " is negative");
  if (k <= 0) throw DivergentIntegral("radial_integral: decay constant must be positive");
  if (q < 0 || q > 2) throw std::domain_error("radial_integral: ln power out of range");
  const Rational prefactor =
      Rational(factorial(static_cast<unsigned>(a))) / rational_pow(k, a + 1);
  return radial_from_parts(prefactor, a, q);
}

Real radial_integral(int a, int q, const Rational& k, const PrecisionContext& ctx) {
  const ExactValue v = radial_integral_exact(a, q, k);
  if (k == ctx.k()) return v.realize(ctx);
  // derive lambda for this decay at working precision
  const mpfr_prec_t wide = ctx.prec() + 64;
  Real k_w(k, wide);
  Real ln_k(wide);
  mpfr_log(ln_k.raw(), k_w.raw(), MPFR_RNDN);
  Real gamma_w(wide);
  mpfr_const_euler(gamma_w.raw(), MPFR_RNDN);
  Real lam_w = gamma_w + ln_k;
  Real lam2_w(wide);
  mpfr_sqr(lam2_w.raw(), lam_w.raw(), MPFR_RNDN);
  return v.realize_with(lam_w.rounded_to(ctx.prec()), lam2_w.rounded_to(ctx.prec()),
                        ctx.pi_squared_over_6(), ctx.prec());
}

RadialTable::RadialTable(const Rational& k, int max_power) : k_(k), max_power_(max_power) {
  if (k <= 0) throw DivergentIntegral("RadialTable: decay constant must be positive");
  if (max_power < 0) throw std::invalid_argument("RadialTable: negative max power");
  values_.reserve(static_cast<std::size_t>(max_power + 1) * 3);
  Rational prefactor = Rational(1) / k;  // a = 0
  Rational h(0), h2(0);
  for (int a = 0; a <= max_power; ++a) {
    if (a > 0) {
      prefactor *= Rational(a) / k;
      h += Rational(1, a);
      Rational inv_sq(1, a);
      inv_sq /= a;
      h2 += inv_sq;
    }
    for (int q = 0; q <= 2; ++q) {
      ExactValue v;
      switch (q) {
        case 0:
          v.c_one = prefactor;
          break;
        case 1:
          v.c_one = prefactor * h;
          v.c_lam = -prefactor;
          break;
        case 2:
          v.c_one = prefactor * (h * h - h2);
          v.c_lam = Rational(-2) * prefactor * h;
          v.c_lam2 = prefactor;
          v.c_pi26 = prefactor;
          break;
      }
      values_.push_back(std::move(v));
    }
  }
}

const ExactValue& RadialTable::integral(int a, int q) const {
  if (a < 0)
    throw DivergentIntegral("RadialTable: net s power " + std::to_string(a) + " is negative");
  if (a > max_power_ || q < 0 || q > 2)
    throw std::out_of_range("RadialTable: power out of range");
  return values_[static_cast<std::size_t>(a) * 3 + static_cast<std::size_t>(q)];
}

ExactValue integrate_full_exact(const StuPolynomial& p) {
  if (p.decay() <= 0 && !p.empty())
    throw DivergentIntegral("integrate_full: nonpositive exponential decay");
  ExactValue total;
  for (const StuMonomial& m : p.monomials()) {
    const long c1 = m.t_pow + 1;
    const long bc2 = m.u_pow + m.t_pow + 2;
    const int a = m.s_pow + m.u_pow + m.t_pow + 2;
    const Rational scale = m.coeff / Rational(c1 * bc2);
    total.add_scaled(scale, radial_integral_exact(a, m.log_pow, p.decay()));
  }
  return total;
}

Real integrate_full(const StuPolynomial& p, const PrecisionContext& ctx) {
  const ExactValue v = integrate_full_exact(p);
  if (p.empty() || p.decay() == ctx.k()) return v.realize(ctx);
  const mpfr_prec_t wide = ctx.prec() + 64;
  Real k_w(p.decay(), wide);
  Real ln_k(wide);
  mpfr_log(ln_k.raw(), k_w.raw(), MPFR_RNDN);
  Real gamma_w(wide);
  mpfr_const_euler(gamma_w.raw(), MPFR_RNDN);
  Real lam_w = gamma_w + ln_k;
  Real lam2_w(wide);
  mpfr_sqr(lam2_w.raw(), lam_w.raw(), MPFR_RNDN);
  return v.realize_with(lam_w.rounded_to(ctx.prec()), lam2_w.rounded_to(ctx.prec()),
                        ctx.pi_squared_over_6(), ctx.prec());
}

}  // namespace hyll
