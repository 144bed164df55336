#include "hyll/linalg.hpp"

#include <stdexcept>

namespace hyll {

bool PackedSymmetric::identical(const PackedSymmetric& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].identical(o.e_[i])) return false;
  return true;
}

void sym_matvec(const PackedSymmetric& a, std::size_t n, const Vector& x, Vector& y,
                mpfr_prec_t prec) {
  if (x.size() < n) throw std::invalid_argument("sym_matvec: vector too short");
  y.assign(n, Real(prec));
  for (std::size_t i = 0; i < n; ++i) {
    Real acc(prec);
    for (std::size_t j = 0; j < n; ++j) acc.add_product(a.at(i, j), x[j]);
    y[i] = std::move(acc);
  }
}

Real dot(const Vector& x, const Vector& y, std::size_t n, mpfr_prec_t prec) {
  Real acc(prec);
  for (std::size_t i = 0; i < n; ++i) acc.add_product(x[i], y[i]);
  return acc;
}

Real norm2(const Vector& x, std::size_t n, mpfr_prec_t prec) {
  Real acc(prec);
  for (std::size_t i = 0; i < n; ++i) acc.add_product(x[i], x[i]);
  return sqrt(acc);
}

}  // namespace hyll
