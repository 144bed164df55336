#ifndef HYLL_CONTEXT_HPP
#define HYLL_CONTEXT_HPP

#include "hyll/rational.hpp"
#include "hyll/real.hpp"

namespace hyll {

// Working-precision context: decimal digit budget, the basis scale k it was
// built for, and the transcendental constants the radial integrals need.
// Immutable after construction; safe to share across threads.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 30;

  int digits() const { return digits_; }
  mpfr_prec_t prec() const { return prec_; }
  const Rational& k() const { return k_; }

  const Real& gamma() const { return gamma_; }            // Euler-Mascheroni
  const Real& pi_squared() const { return pi_squared_; }
  const Real& ln_k() const { return ln_k_; }

  // lambda = gamma + ln k; the radial integrals are rational combinations
  // of {1, lambda, lambda^2, pi^2/6}.
  const Real& lambda() const { return lambda_; }
  const Real& lambda_squared() const { return lambda_squared_; }
  const Real& pi_squared_over_6() const { return pi_squared_over_6_; }

  friend PrecisionContext make_context(int digits, const Rational& k);

 private:
  PrecisionContext() = default;

  int digits_ = 0;
  mpfr_prec_t prec_ = 0;
  Rational k_;
  Real gamma_, pi_squared_, ln_k_;
  Real lambda_, lambda_squared_, pi_squared_over_6_;
};

// Builds a context with all constants correct to `digits` decimal digits.
// Throws std::invalid_argument for digits < 30 or k <= 0.
PrecisionContext make_context(int digits, const Rational& k);

}  // namespace hyll

#endif  // HYLL_CONTEXT_HPP
