#ifndef HYLL_RADIAL_HPP
#define HYLL_RADIAL_HPP

#include "hyll/context.hpp"
#include "hyll/errors.hpp"
#include "hyll/stu_polynomial.hpp"

namespace hyll {

// Exact value c1 + c_lam*L + c_lam2*L^2 + c_pi26*(pi^2/6) with L = gamma + ln k.
// Every integral of an F-basis integrand reduces to this form with rational
// coefficients; realization to a Real happens once, at chosen precision.
struct ExactValue {
  Rational c_one, c_lam, c_lam2, c_pi26;

  ExactValue& operator+=(const ExactValue& o);
  ExactValue& add_scaled(const Rational& c, const ExactValue& o);
  bool is_rational() const { return c_lam == 0 && c_lam2 == 0 && c_pi26 == 0; }
  friend bool operator==(const ExactValue&, const ExactValue&) = default;

  Real realize(const PrecisionContext& ctx) const;
  // Realization with lambda = gamma + ln k' for a decay k' other than ctx.k().
  Real realize_with(const Real& lambda, const Real& lambda_squared,
                    const Real& pi_squared_over_6, mpfr_prec_t prec) const;
};

// integral_0^inf s^a (ln s)^q e^{-ks} ds as an ExactValue:
//   q=0: a!/k^{a+1}
//   q=1: (a!/k^{a+1}) (H_a - L)
//   q=2: (a!/k^{a+1}) ((H_a - L)^2 + pi^2/6 - H_a^(2))
// Throws DivergentIntegral for a < 0 or k <= 0.
ExactValue radial_integral_exact(int a, int q, const Rational& k);

// Same integral realized at ctx precision. Uses the cached constants when
// k equals the context scale, otherwise derives lambda for this k.
Real radial_integral(int a, int q, const Rational& k, const PrecisionContext& ctx);

// Memoized radial integrals for one decay constant; read-only once built,
// safe to share across assembly threads.
class RadialTable {
 public:
  RadialTable(const Rational& k, int max_power);
  const Rational& k() const { return k_; }
  int max_power() const { return max_power_; }
  const ExactValue& integral(int a, int q) const;

 private:
  Rational k_;
  int max_power_;
  std::vector<ExactValue> values_;  // indexed a*3 + q
};

// integrate_t_then_u followed by the radial integral, summed over monomials;
// rational bookkeeping is exact until realization.
ExactValue integrate_full_exact(const StuPolynomial& p);
Real integrate_full(const StuPolynomial& p, const PrecisionContext& ctx);

}  // namespace hyll

#endif  // HYLL_RADIAL_HPP
