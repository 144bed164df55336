#ifndef HYLL_STU_POLYNOMIAL_HPP
#define HYLL_STU_POLYNOMIAL_HPP

#include <vector>

#include "hyll/basis.hpp"
#include "hyll/rational.hpp"

namespace hyll {

enum class Var { s, u, t };

// coeff * s^a u^b t^c (ln s)^q with a possibly negative, b,c >= 0, q in 0..2.
struct StuMonomial {
  Rational coeff;
  int s_pow = 0;
  int u_pow = 0;
  int t_pow = 0;
  int log_pow = 0;
};

// Sparse exact polynomial in s, u, t and ln s, carrying a global factor
// e^{-decay*s}. Closed under product (decays add, ln powers add) and
// derivative (including the decay and ln chain terms).
class StuPolynomial {
 public:
  StuPolynomial() = default;
  explicit StuPolynomial(const Rational& decay) : decay_(decay) {}

  static StuPolynomial monomial(const Rational& coeff, int s_pow, int u_pow, int t_pow,
                                int log_pow, const Rational& decay);

  // The trial function phi_{l,m,n,q} = (ln s)^q e^{-ks/2} s^{l-m-n} u^m t^n.
  static StuPolynomial from_basis_term(const BasisTerm& term, const Rational& k);

  const std::vector<StuMonomial>& monomials() const { return monomials_; }
  const Rational& decay() const { return decay_; }
  bool empty() const { return monomials_.empty(); }

  StuPolynomial& operator+=(const StuPolynomial& other);  // decays must match
  StuPolynomial& scale(const Rational& c);

  friend bool operator==(const StuPolynomial& a, const StuPolynomial& b);

 private:
  friend StuPolynomial product(const StuPolynomial&, const StuPolynomial&);
  friend StuPolynomial differentiate(const StuPolynomial&, Var);
  friend StuPolynomial integrate_t_then_u(const StuPolynomial&);

  void insert(StuMonomial mono);
  void normalize();

  std::vector<StuMonomial> monomials_;
  Rational decay_ = Rational(0);
};

// Exact distributed product; throws std::domain_error when the combined
// ln s power would exceed 2 (cannot happen for pairs of basis functions).
StuPolynomial product(const StuPolynomial& p1, const StuPolynomial& p2);

// Term-wise exact derivative. For Var::s this includes the -decay chain
// term and d/ds[s^a (ln s)^q] = a s^{a-1}(ln s)^q + q s^{a-1}(ln s)^{q-1}.
StuPolynomial differentiate(const StuPolynomial& p, Var var);

// Inner integrals over 0 <= t <= u <= s:
// u^b t^c -> s^{b+c+2} / ((c+1)(b+c+2)), with s power and ln power kept.
StuPolynomial integrate_t_then_u(const StuPolynomial& p);

}  // namespace hyll

#endif  // HYLL_STU_POLYNOMIAL_HPP
