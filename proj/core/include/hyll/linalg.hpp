#ifndef HYLL_LINALG_HPP
#define HYLL_LINALG_HPP

#include <cstddef>
#include <vector>

#include "hyll/real.hpp"

namespace hyll {

using Vector = std::vector<Real>;

// Symmetric matrix stored as the lower triangle, row-major packed:
// element (i,j), j <= i, lives at i(i+1)/2 + j. With this layout the
// leading principal n'xn' block is exactly the first n'(n'+1)/2 entries,
// so growing a pencil by an order appends rows without moving anything.
class PackedSymmetric {
 public:
  PackedSymmetric() = default;
  explicit PackedSymmetric(std::size_t n) : n_(n), e_(n * (n + 1) / 2) {}

  std::size_t dim() const { return n_; }
  std::size_t packed_size() const { return e_.size(); }

  static std::size_t packed_index(std::size_t i, std::size_t j) {
    return i * (i + 1) / 2 + j;  // requires j <= i
  }

  Real& lower(std::size_t i, std::size_t j) { return e_[packed_index(i, j)]; }
  const Real& lower(std::size_t i, std::size_t j) const { return e_[packed_index(i, j)]; }

  const Real& at(std::size_t i, std::size_t j) const {
    return j <= i ? e_[packed_index(i, j)] : e_[packed_index(j, i)];
  }

  Real& flat(std::size_t idx) { return e_[idx]; }
  const Real& flat(std::size_t idx) const { return e_[idx]; }

  // Appends rows until dim() == n (new entries default to zero).
  void grow(std::size_t n) {
    if (n < n_) throw std::invalid_argument("PackedSymmetric::grow: cannot shrink");
    n_ = n;
    e_.resize(n * (n + 1) / 2);
  }

  bool identical(const PackedSymmetric& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<Real> e_;
};

// y = A x over the leading n-block, at precision `prec`.
void sym_matvec(const PackedSymmetric& a, std::size_t n, const Vector& x, Vector& y,
                mpfr_prec_t prec);

// <x, y> at precision `prec` (fused multiply-accumulate loop).
Real dot(const Vector& x, const Vector& y, std::size_t n, mpfr_prec_t prec);

// Euclidean norm at precision `prec`.
Real norm2(const Vector& x, std::size_t n, mpfr_prec_t prec);

}  // namespace hyll

#endif  // HYLL_LINALG_HPP
