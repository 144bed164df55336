#include "hyll/eigensolve.hpp"

#include <optional>
#include <string>

#include "hyll/errors.hpp"

namespace hyll {

CholeskyResult cholesky(const PackedSymmetric& S, std::size_t n, mpfr_prec_t prec) {
  CholeskyResult r;
  r.L = PackedSymmetric(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Real acc = S.lower(i, j).rounded_to(prec);
      for (std::size_t k = 0; k < j; ++k) acc.sub_product(r.L.lower(i, k), r.L.lower(j, k));
      if (j == i) {
        if (acc.sign() <= 0) {
          r.ok = false;
          r.fail_index = i;
          return r;
        }
        r.L.lower(i, i) = sqrt(acc);
      } else {
        r.L.lower(i, j) = acc / r.L.lower(j, j);
      }
    }
  }
  r.ok = true;
  return r;
}

namespace {

LdltResult ldlt_attempt(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                        const Real& sigma, mpfr_prec_t prec) {
  LdltResult r;
  r.sigma = sigma.rounded_to(prec);
  r.L = PackedSymmetric(n);
  r.d.assign(n, Real(prec));
  Vector row_ld(n, Real(prec));  // v[k] = L_ik * d_k for the current row

  auto shifted = [&](std::size_t i, std::size_t j) {
    Real m = H.lower(i, j).rounded_to(prec);
    m.sub_product(r.sigma, S.lower(i, j));
    return m;
  };

  r.negative_pivots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Real acc = shifted(i, j);
      for (std::size_t k = 0; k < j; ++k) acc.sub_product(row_ld[k], r.L.lower(j, k));
      r.L.lower(i, j) = acc / r.d[j];
      row_ld[j] = r.L.lower(i, j) * r.d[j];
    }
    Real acc = shifted(i, i);
    for (std::size_t k = 0; k < i; ++k) acc.sub_product(row_ld[k], r.L.lower(i, k));
    if (acc.is_zero()) {
      r.ok = false;
      r.fail_index = i;
      return r;
    }
    if (acc.sign() < 0) ++r.negative_pivots;
    r.L.lower(i, i) = Real(1L, prec);
    r.d[i] = std::move(acc);
  }
  r.ok = true;
  return r;
}

}  // namespace

LdltResult ldlt_shifted(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                        const Real& sigma, mpfr_prec_t prec) {
  LdltResult r = ldlt_attempt(H, S, n, sigma, prec);
  if (r.ok) return r;
  // exact zero pivot: nudge the shift by an ulp-scale amount and retry once
  Real step = abs(sigma.rounded_to(prec));
  if (step.is_zero()) step = Real(1L, prec);
  Real scale(prec);
  mpfr_set_ui_2exp(scale.raw(), 1, -static_cast<mpfr_exp_t>(prec) + 4, MPFR_RNDN);
  Real perturbed = sigma.rounded_to(prec) - step * scale;
  return ldlt_attempt(H, S, n, perturbed, prec);
}

void ldlt_solve(const LdltResult& f, std::size_t n, Vector& x, mpfr_prec_t prec) {
  // forward: L y = x
  for (std::size_t i = 0; i < n; ++i) {
    Real acc = x[i].rounded_to(prec);
    for (std::size_t k = 0; k < i; ++k) acc.sub_product(f.L.lower(i, k), x[k]);
    x[i] = std::move(acc);
  }
  // diagonal
  for (std::size_t i = 0; i < n; ++i) x[i] /= f.d[i];
  // backward: L^T z = y
  for (std::size_t i = n; i-- > 0;) {
    Real acc = std::move(x[i]);
    for (std::size_t k = i + 1; k < n; ++k) acc.sub_product(f.L.lower(k, i), x[k]);
    x[i] = std::move(acc);
  }
}

namespace {

int inertia_below(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                  const Real& sigma, mpfr_prec_t prec) {
  LdltResult f = ldlt_shifted(H, S, n, sigma, prec);
  if (!f.ok)
    throw SolverError("inertia: zero pivot persisted at index " + std::to_string(f.fail_index));
  return f.negative_pivots;
}

// Rounding floor of ||H c - rho S c||_2: the norm of the componentwise
// bound eps * (|H||c| + |rho||S||c|). Below this level the residual is
// indistinguishable from zero at the working precision, however ill
// conditioned the overlap is.
Real residual_floor(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                    const Vector& c, const Real& rho, mpfr_prec_t prec) {
  const Real abs_rho = abs(rho);
  Real acc(prec);
  for (std::size_t i = 0; i < n; ++i) {
    Real h_row(prec), s_row(prec);
    for (std::size_t j = 0; j < n; ++j) {
      const Real cj = abs(c[j]);
      h_row.add_product(abs(H.at(i, j)), cj);
      s_row.add_product(abs(S.at(i, j)), cj);
    }
    Real row = h_row;
    row.add_product(abs_rho, s_row);
    acc.add_product(row, row);
  }
  Real eps(prec);
  mpfr_set_ui_2exp(eps.raw(), 1, 1 - static_cast<mpfr_exp_t>(prec), MPFR_RNDN);
  return sqrt(acc) * eps;
}

}  // namespace

EigenResult lowest_eigenpair(const PackedSymmetric& H, const PackedSymmetric& S, std::size_t n,
                             const EigenOptions& opt) {
  if (n == 0) throw std::invalid_argument("lowest_eigenpair: empty pencil");
  const mpfr_prec_t prec = opt.prec;
  const Real tol = opt.tol.rounded_to(prec);

  Real sigma_lo = opt.sigma0.rounded_to(prec);
  // the adopted shift must sit strictly below the whole spectrum: there the
  // lowest eigenvalue is the one nearest the shift and inverse iteration
  // cannot lock onto anything else
  for (int attempt = 0; inertia_below(H, S, n, sigma_lo, prec) > 0; ++attempt) {
    if (attempt >= 6)
      throw SolverError("lowest_eigenpair: could not find a shift below the spectrum");
    Real span = abs(sigma_lo);
    if (span < Real(1L, prec)) span = Real(1L, prec);
    sigma_lo -= span * Real(2L, prec);
  }

  LdltResult fac = ldlt_shifted(H, S, n, sigma_lo, prec);
  if (!fac.ok)
    throw SolverError("lowest_eigenpair: factorization failed at index " +
                      std::to_string(fac.fail_index));

  Vector c(n, Real(prec));
  for (std::size_t i = 0; i < n; ++i) c[i] = Real(1L, prec);
  {  // S-normalize the start vector
    Vector sc(n, Real(prec));
    sym_matvec(S, n, c, sc, prec);
    Real nrm = sqrt(dot(c, sc, n, prec));
    for (std::size_t i = 0; i < n; ++i) c[i] /= nrm;
  }

  Real rho(prec);
  Real delta(prec);
  std::optional<Real> sigma_hi;  // known upper bracket (inertia >= 1)
  bool have_rho = false;
  int iterations = 0;
  int since_refactor = 0;
  std::optional<Real> best_delta;  // fail-fast: detect a rounding plateau
  int stagnant = 0;
  Real residual_norm(prec);
  Vector sc(n, Real(prec)), hc(n, Real(prec)), x(n, Real(prec));

  // Move the working shift upward while keeping its inertia at zero; the
  // Rayleigh quotient is the candidate, the (sigma_lo, sigma_hi) bracket
  // the fallback when the quotient is still above the second eigenvalue.
  // Returns whether the working shift advanced.
  auto refactor = [&]() {
    Real target = rho;
    if (sigma_hi && *sigma_hi < target) target = (sigma_lo + *sigma_hi) / Real(2L, prec);
    if (!(target > sigma_lo)) return false;
    LdltResult trial = ldlt_shifted(H, S, n, target, prec);
    if (trial.ok && trial.negative_pivots == 0) {
      sigma_lo = trial.sigma;
      fac = std::move(trial);
      return true;
    }
    if (trial.ok) sigma_hi = trial.sigma;
    Real mid = (sigma_lo + (sigma_hi ? *sigma_hi : target)) / Real(2L, prec);
    if (!(mid > sigma_lo)) return false;
    LdltResult second = ldlt_shifted(H, S, n, mid, prec);
    if (second.ok && second.negative_pivots == 0) {
      sigma_lo = second.sigma;
      fac = std::move(second);
      return true;
    }
    if (second.ok) sigma_hi = second.sigma;  // bracket halves; retry next round
    return false;
  };

  while (true) {
    if (++iterations > opt.max_iter)
      throw SolverError("lowest_eigenpair: no convergence after " +
                        std::to_string(opt.max_iter) + " iterations");
    sym_matvec(S, n, c, sc, prec);
    x = sc;
    ldlt_solve(fac, n, x, prec);
    // S-normalize the update
    Vector sx(n, Real(prec));
    sym_matvec(S, n, x, sx, prec);
    Real nrm2_s = dot(x, sx, n, prec);
    if (nrm2_s.sign() <= 0)
      throw SolverError("lowest_eigenpair: overlap norm lost positivity during iteration");
    Real nrm = sqrt(nrm2_s);
    for (std::size_t i = 0; i < n; ++i) c[i] = x[i] / nrm;

    sym_matvec(H, n, c, hc, prec);
    Real rho_new = dot(c, hc, n, prec);
    if (have_rho) {
      delta = abs(rho_new - rho);
      rho = rho_new;
      if (delta <= tol * abs(rho) && iterations >= 2) {
        // accept once the residual meets the tolerance or sits on its own
        // rounding floor (whichever is larger); the floor is what an exact
        // eigenvector would produce after rounding the matrix products
        sym_matvec(S, n, c, sc, prec);
        Vector r(n, Real(prec));
        for (std::size_t i = 0; i < n; ++i) {
          Real ri = hc[i];
          ri.sub_product(rho, sc[i]);
          r[i] = std::move(ri);
        }
        residual_norm = norm2(r, n, prec);
        Real allowed = tol * abs(rho);
        const Real floor = residual_floor(H, S, n, c, rho, prec) * Real(16L, prec);
        if (floor > allowed) allowed = floor;
        if (residual_norm <= allowed) break;
      }
      // progress bookkeeping: once the quotient neither halves its step nor
      // admits a better shift for this long, it sits on the rounding floor
      // of this precision and the tolerance is not reachable here
      if (!best_delta || delta < *best_delta / Real(2L, prec)) {
        best_delta = delta;
        stagnant = 0;
      } else {
        ++stagnant;
      }
    } else {
      rho = rho_new;
      have_rho = true;
    }
    if (++since_refactor >= 4) {
      if (refactor()) stagnant = 0;
      since_refactor = 0;
    }
    if (stagnant > 32)
      throw SolverError(
          "lowest_eigenpair: Rayleigh quotient stagnated above the requested tolerance "
          "(insufficient precision for this pencil)");
  }

  // inertia certificate around the converged Rayleigh quotient
  Real bracket = delta + delta + tol * abs(rho);
  const int below = inertia_below(H, S, n, rho - bracket, prec);
  const int above = inertia_below(H, S, n, rho + bracket, prec);
  if (above >= 2)
    throw SolverError("lowest_eigenpair: " + std::to_string(above) +
                      " eigenvalues inside the certificate bracket; degenerate ground state");

  EigenResult out;
  out.energy = rho;
  out.residual_norm = residual_norm;
  out.iterations = iterations;
  out.certified_lowest = (below == 0 && above == 1);

  // deterministic sign: first nonzero coefficient positive
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].is_zero()) continue;
    if (c[i].sign() < 0)
      for (std::size_t j = 0; j < n; ++j) c[j] = -c[j];
    break;
  }
  out.coefficients = std::move(c);
  return out;
}

}  // namespace hyll
