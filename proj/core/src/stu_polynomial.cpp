#include "hyll/stu_polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace hyll {

namespace {

auto key(const StuMonomial& m) {
  return std::make_tuple(m.s_pow, m.u_pow, m.t_pow, m.log_pow);
}

}  // namespace

StuPolynomial StuPolynomial::monomial(const Rational& coeff, int s_pow, int u_pow, int t_pow,
                                      int log_pow, const Rational& decay) {
  if (u_pow < 0 || t_pow < 0) throw std::domain_error("StuPolynomial: negative u or t power");
  if (log_pow < 0 || log_pow > 2) throw std::domain_error("StuPolynomial: ln power out of range");
  StuPolynomial p(decay);
  p.decay_.canonicalize();
  Rational c = coeff;
  c.canonicalize();  // mpq comparisons require canonical operands
  if (c != 0) p.monomials_.push_back({std::move(c), s_pow, u_pow, t_pow, log_pow});
  return p;
}

StuPolynomial StuPolynomial::from_basis_term(const BasisTerm& term, const Rational& k) {
  if (!term.valid()) throw std::invalid_argument("from_basis_term: invalid term");
  return monomial(Rational(1), term.l - term.m - term.n, term.m, term.n, term.q, k / 2);
}

void StuPolynomial::insert(StuMonomial mono) {
  if (mono.coeff == 0) return;
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), mono,
                             [](const StuMonomial& a, const StuMonomial& b) { return key(a) < key(b); });
  if (it != monomials_.end() && key(*it) == key(mono)) {
    it->coeff += mono.coeff;
    if (it->coeff == 0) monomials_.erase(it);
  } else {
    monomials_.insert(it, std::move(mono));
  }
}

void StuPolynomial::normalize() {
  std::sort(monomials_.begin(), monomials_.end(),
            [](const StuMonomial& a, const StuMonomial& b) { return key(a) < key(b); });
  std::vector<StuMonomial> merged;
  merged.reserve(monomials_.size());
  for (StuMonomial& m : monomials_) {
    if (!merged.empty() && key(merged.back()) == key(m))
      merged.back().coeff += m.coeff;
    else
      merged.push_back(std::move(m));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const StuMonomial& m) { return m.coeff == 0; }),
               merged.end());
  monomials_ = std::move(merged);
}

StuPolynomial& StuPolynomial::operator+=(const StuPolynomial& other) {
  if (!other.monomials_.empty() && !monomials_.empty() && decay_ != other.decay_)
    throw std::domain_error("StuPolynomial: adding polynomials with different decays");
  if (monomials_.empty()) decay_ = other.decay_;
  for (const StuMonomial& m : other.monomials_) insert(m);
  return *this;
}

StuPolynomial& StuPolynomial::scale(const Rational& c) {
  if (c == 0) {
    monomials_.clear();
    return *this;
  }
  for (StuMonomial& m : monomials_) m.coeff *= c;
  return *this;
}

bool operator==(const StuPolynomial& a, const StuPolynomial& b) {
  if (a.monomials_.size() != b.monomials_.size()) return false;
  if (!a.monomials_.empty() && a.decay_ != b.decay_) return false;
  for (std::size_t i = 0; i < a.monomials_.size(); ++i) {
    const StuMonomial& x = a.monomials_[i];
    const StuMonomial& y = b.monomials_[i];
    if (key(x) != key(y) || x.coeff != y.coeff) return false;
  }
  return true;
}

StuPolynomial product(const StuPolynomial& p1, const StuPolynomial& p2) {
  StuPolynomial out(p1.decay_ + p2.decay_);
  out.monomials_.reserve(p1.monomials_.size() * p2.monomials_.size());
  for (const StuMonomial& x : p1.monomials_)
    for (const StuMonomial& y : p2.monomials_) {
      const int q = x.log_pow + y.log_pow;
      if (q > 2)
        throw std::domain_error("product: ln s power exceeds 2; not an F-basis pairing");
      out.monomials_.push_back(
          {x.coeff * y.coeff, x.s_pow + y.s_pow, x.u_pow + y.u_pow, x.t_pow + y.t_pow, q});
    }
  out.normalize();
  return out;
}

StuPolynomial differentiate(const StuPolynomial& p, Var var) {
  StuPolynomial out(p.decay_);
  for (const StuMonomial& m : p.monomials_) {
    switch (var) {
      case Var::u:
        if (m.u_pow > 0)
          out.insert({m.coeff * m.u_pow, m.s_pow, m.u_pow - 1, m.t_pow, m.log_pow});
        break;
      case Var::t:
        if (m.t_pow > 0)
          out.insert({m.coeff * m.t_pow, m.s_pow, m.u_pow, m.t_pow - 1, m.log_pow});
        break;
      case Var::s:
        if (m.s_pow != 0)
          out.insert({m.coeff * m.s_pow, m.s_pow - 1, m.u_pow, m.t_pow, m.log_pow});
        if (m.log_pow > 0)
          out.insert({m.coeff * m.log_pow, m.s_pow - 1, m.u_pow, m.t_pow, m.log_pow - 1});
        if (p.decay_ != 0)
          out.insert({-m.coeff * p.decay_, m.s_pow, m.u_pow, m.t_pow, m.log_pow});
        break;
    }
  }
  return out;
}

StuPolynomial integrate_t_then_u(const StuPolynomial& p) {
  StuPolynomial out(p.decay_);
  for (const StuMonomial& m : p.monomials_) {
    const long c1 = m.t_pow + 1;
    const long bc2 = m.u_pow + m.t_pow + 2;
    StuMonomial r;
    r.coeff = m.coeff / Rational(c1 * bc2);
    r.s_pow = m.s_pow + m.u_pow + m.t_pow + 2;
    r.u_pow = 0;
    r.t_pow = 0;
    r.log_pow = m.log_pow;
    out.insert(std::move(r));
  }
  return out;
}

}  // namespace hyll
