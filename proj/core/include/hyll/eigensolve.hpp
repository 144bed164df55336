#ifndef HYLL_EIGENSOLVE_HPP
#define HYLL_EIGENSOLVE_HPP

#include <cstddef>

#include "hyll/linalg.hpp"

namespace hyll {

struct CholeskyResult {
  bool ok = false;
  std::size_t fail_index = 0;  // first pivot <= 0 when !ok
  PackedSymmetric L;
};

// LL^T factorization of the leading n-block at precision `prec`.
CholeskyResult cholesky(const PackedSymmetric& S, std::size_t n, mpfr_prec_t prec);

struct LdltResult {
  bool ok = false;
  std::size_t fail_index = 0;  // pivot that stayed exactly zero after retry
  PackedSymmetric L;           // unit lower triangle
  Vector d;                    // diagonal pivots
  int negative_pivots = 0;     // = number of pencil eigenvalues below sigma
  Real sigma;                  // shift actually used (may be perturbed once)
};

// LDL^T of (H - sigma S) with plain diagonal pivots (no pivoting), over the
// leading n-block. An exactly zero pivot perturbs sigma by one ulp-scale
// step and retries once.
LdltResult ldlt_shifted(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                        const Real& sigma, mpfr_prec_t prec);

// Solves (H - sigma S) x = b in place using an LdltResult.
void ldlt_solve(const LdltResult& f, std::size_t n, Vector& x, mpfr_prec_t prec);

struct EigenResult {
  Real energy;
  Vector coefficients;  // S-normalized, first nonzero component positive
  Real residual_norm;   // ||H c - E S c||_2
  int iterations = 0;
  bool certified_lowest = false;
};

struct EigenOptions {
  Real sigma0;          // must sit below the lowest pencil eigenvalue
  Real tol;             // relative Rayleigh-quotient stagnation threshold
  int max_iter = 200;
  mpfr_prec_t prec = 128;
};

// Shifted inverse iteration with Rayleigh-quotient updates, then an LDL^T
// inertia certificate that exactly zero eigenvalues lie below the bracket
// and exactly one lies inside it. Throws SolverError when the iteration
// exhausts max_iter or a factorization fails outright.
EigenResult lowest_eigenpair(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                             const EigenOptions& opt);

}  // namespace hyll

#endif  // HYLL_EIGENSOLVE_HPP
