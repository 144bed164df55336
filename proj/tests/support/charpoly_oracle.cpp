#include "charpoly_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyll_tests {

using hyll::PackedSymmetric;
using hyll::Rational;
using hyll::Real;

namespace {

// sign of det(H - sigma S) by LU with partial pivoting; 0 for a vanishing pivot
int det_sign(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
             const Real& sigma, mpfr_prec_t prec) {
  std::vector<std::vector<Real>> m(n, std::vector<Real>(n, Real(prec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Real v = H.at(i, j).rounded_to(prec);
      v.sub_product(sigma, S.at(i, j));
      m[i][j] = std::move(v);
    }
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(m[r][col]) > abs(m[pivot][col])) pivot = r;
    if (m[pivot][col].is_zero()) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    if (m[col][col].sign() < 0) sign = -sign;
    for (std::size_t r = col + 1; r < n; ++r) {
      Real f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return sign;
}

}  // namespace

Real charpoly_lowest_root(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                          double lo, double hi, double step, int target_digits,
                          mpfr_prec_t prec) {
  Real a(lo, prec);
  int sign_a = det_sign(H, S, n, a, prec);
  Real b(prec);
  int sign_b = 0;
  bool found = false;
  for (double x = lo + step; x <= hi + 1e-12; x += step) {
    b = Real(x, prec);
    sign_b = det_sign(H, S, n, b, prec);
    if (sign_b == 0) {  // landed on a root; nudge and let bisection take over
      b = Real(x + step * 1e-6, prec);
      sign_b = det_sign(H, S, n, b, prec);
    }
    if (sign_b != sign_a) {
      found = true;
      break;
    }
    a = b;
    sign_a = sign_b;
  }
  if (!found)
    throw std::runtime_error("charpoly_lowest_root: no sign change in the scan interval");

  const Real width = hyll::pow10(-target_digits, prec);
  while (abs(b - a) > width) {
    Real mid = (a + b) / Real(2L, prec);
    const int sign_mid = det_sign(H, S, n, mid, prec);
    if (sign_mid == 0) {
      // exact zero of the determinant: mid is the root to working precision
      return mid;
    }
    if (sign_mid == sign_a) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return (a + b) / Real(2L, prec);
}

namespace {

using Poly = std::vector<Rational>;  // coefficients, low to high

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
  return r;
}

// remainder of a / b over Q
Poly rem(Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("poly rem: zero divisor");
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// determinant of a polynomial matrix by cofactor expansion (small n only)
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Poly term = mul(m[0][col], poly_det(minor));
    if (col % 2 == 1)
      for (Rational& c : term) c = -c;
    acc.resize(std::max(acc.size(), term.size()), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    trim(acc);
  }
  return acc;
}

}  // namespace

int charpoly_count_below(const RationalMatrix& H, const RationalMatrix& S,
                         const Rational& sigma) {
  const std::size_t n = H.size();
  if (n == 0 || S.size() != n) throw std::invalid_argument("charpoly_count_below: bad shapes");
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Poly{H[i][j], -S[i][j]};

  Poly p = poly_det(m);
  if (p.empty()) throw std::invalid_argument("charpoly_count_below: singular pencil");

  // Sturm chain
  std::vector<Poly> chain{p, derivative(p)};
  trim(chain.back());
  while (!chain.back().empty() && chain.back().size() > 1) {
    Poly r = rem(chain[chain.size() - 2], chain.back());
    for (Rational& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  auto variations_at = [&chain](const Rational& x) {
    int v = 0, prev = 0;
    for (const Poly& q : chain) {
      if (q.empty()) continue;
      const int s = sign_of(eval(q, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  auto variations_at_minus_inf = [&chain]() {
    int v = 0, prev = 0;
    for (const Poly& q : chain) {
      if (q.empty()) continue;
      int s = sign_of(q.back());
      if ((q.size() - 1) % 2 == 1) s = -s;  // odd degree flips at -inf
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };

  return variations_at_minus_inf() - variations_at(sigma);
}

}  // namespace hyll_tests
