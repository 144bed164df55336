#include "quadrature_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hyll_tests {

using hyll::Rational;
using hyll::Real;

namespace {

// integrand of the substituted radial integral: s = e^x gives
// f(x) = e^{(a+1)x} x^q e^{-k e^x}
Real radial_integrand(const Real& x, int a, int q, const Real& k, mpfr_prec_t prec) {
  Real ex(prec);
  mpfr_exp(ex.raw(), x.raw(), MPFR_RNDN);  // e^x
  Real arg = Real(static_cast<long>(a + 1), prec) * x - k * ex;
  Real f(prec);
  mpfr_exp(f.raw(), arg.raw(), MPFR_RNDN);
  for (int i = 0; i < q; ++i) f *= x;
  return f;
}

Real trapezoid_radial(double x_lo, double x_hi, double h, int a, int q, const Real& k,
                      mpfr_prec_t prec) {
  const long steps = static_cast<long>((x_hi - x_lo) / h);
  Real sum(prec);
  for (long i = 0; i <= steps; ++i) {
    Real x(x_lo + h * static_cast<double>(i), prec);
    Real f = radial_integrand(x, a, q, k, prec);
    if (i == 0 || i == steps) f /= Real(2L, prec);
    sum += f;
  }
  return sum * Real(h, prec);
}

}  // namespace

Real quad_radial(int a, int q, const Rational& k, int digits) {
  if (a < 0 || q < 0 || q > 2 || k <= 0) throw std::invalid_argument("quad_radial: bad arguments");
  const mpfr_prec_t prec = hyll::bits_for_digits(digits + 15);
  const Real kr(k, prec);
  const double kd = kr.to_double();

  // truncation bounds: left tail decays like e^{(a+1)x}, right like e^{-k e^x}
  const double needed = (digits + 20) * 2.302585093;
  const double x_lo = -(needed + 25.0) / static_cast<double>(a + 1) - 10.0;
  double x_hi = 2.0;
  while (kd * std::exp(x_hi) - (a + 1) * x_hi - 2.0 * std::log(x_hi + 1.0) < needed + 25.0)
    x_hi += 0.5;

  const Real target = hyll::pow10(-(digits + 5), prec);
  double h = 1.0 / 16.0;
  Real prev = trapezoid_radial(x_lo, x_hi, h, a, q, kr, prec);
  for (int refine = 0; refine < 6; ++refine) {
    h /= 2.0;
    Real cur = trapezoid_radial(x_lo, x_hi, h, a, q, kr, prec);
    Real diff = abs(cur - prev);
    Real scale = abs(cur);
    if (scale < Real(1L, prec)) scale = Real(1L, prec);
    prev = cur;
    if (diff <= target * scale) return prev;
  }
  throw std::runtime_error("quad_radial: quadrature did not settle");
}

namespace {

// tanh-sinh rule for integral_0^1 x^p dx (p >= 0 integer)
Real unit_power_integral(long p, int digits) {
  const mpfr_prec_t prec = hyll::bits_for_digits(digits + 15);
  const Real one(1L, prec);
  const Real half(prec);
  Real pi_half(prec);
  mpfr_const_pi(pi_half.raw(), MPFR_RNDN);
  Real pi_over_2 = pi_half / Real(2L, prec);

  const Real target = hyll::pow10(-(digits + 5), prec);
  const double w_max = 4.6;  // double-exponential tail is ~1e-100 here
  double h = 1.0 / 8.0;

  auto sweep = [&](double step) {
    const long steps = static_cast<long>(w_max / step);
    Real sum(prec);
    for (long i = -steps; i <= steps; ++i) {
      Real w(step * static_cast<double>(i), prec);
      Real sinh_w(prec), cosh_w(prec);
      mpfr_sinh_cosh(sinh_w.raw(), cosh_w.raw(), w.raw(), MPFR_RNDN);
      Real t = pi_over_2 * sinh_w;
      Real tanh_t(prec), cosh_t(prec);
      mpfr_tanh(tanh_t.raw(), t.raw(), MPFR_RNDN);
      mpfr_cosh(cosh_t.raw(), t.raw(), MPFR_RNDN);
      Real x = (one + tanh_t) / Real(2L, prec);
      Real dx = pi_over_2 * cosh_w / (Real(2L, prec) * cosh_t * cosh_t);
      Real f(1L, prec);
      mpfr_pow_ui(f.raw(), x.raw(), static_cast<unsigned long>(p), MPFR_RNDN);
      sum += f * dx;
    }
    return sum * Real(step, prec);
  };

  Real prev = sweep(h);
  for (int refine = 0; refine < 6; ++refine) {
    h /= 2.0;
    Real cur = sweep(h);
    Real diff = abs(cur - prev);
    prev = cur;
    if (diff <= target) return prev;
  }
  throw std::runtime_error("unit_power_integral: quadrature did not settle");
}

}  // namespace

Real quad_simplex(int a, int b, int c, int q, const Rational& k, int digits) {
  if (b < 0 || c < 0) throw std::invalid_argument("quad_simplex: bad powers");
  // t = u*tau, u = s*mu:
  //   integral = [int_0^inf s^{a+b+c+2} (ln s)^q e^{-ks} ds]
  //            * [int_0^1 mu^{b+c+1} dmu] * [int_0^1 tau^c dtau]
  const Real radial = quad_radial(a + b + c + 2, q, k, digits);
  const Real mu = unit_power_integral(b + c + 1, digits);
  const Real tau = unit_power_integral(c, digits);
  return radial * mu * tau;
}

}  // namespace hyll_tests
