#include "hyll/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hyll/checkpoint.hpp"
#include "hyll/errors.hpp"
#include "hyll/table_format.hpp"

namespace hyll {

int PrecisionPolicy::digits_for(int omega) const {
  if (fixed_digits) return *fixed_digits;
  return std::max(auto_floor, auto_offset + auto_slope * omega);
}

int PrecisionPolicy::escalate(int digits) const {
  return static_cast<int>(std::ceil(digits * escalation_factor));
}

Real PrecisionPolicy::tol_for(int digits) const {
  return pow10(-(digits - tol_guard_digits), bits_for_digits(digits));
}

namespace {

int effective_threads(int configured) {
  if (configured > 0) return configured;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

EigenResult solve_pencil_lowest(const Pencil& pencil, std::size_t n_eff,
                                const PrecisionContext& ctx, const PrecisionPolicy& policy,
                                const std::optional<Real>& warm_energy,
                                const std::optional<Real>& warm_delta) {
  EigenOptions opt;
  opt.prec = ctx.prec();
  opt.tol = policy.tol_for(ctx.digits());
  opt.max_iter = 400;
  if (warm_energy) {
    Real margin = warm_delta ? abs(*warm_delta) * Real(10L, ctx.prec()) : Real(1L, ctx.prec());
    opt.sigma0 = *warm_energy - margin;
  } else {
    opt.sigma0 = Real(-3L, ctx.prec());
  }
  return lowest_eigenpair(pencil.H, pencil.S, n_eff, opt);
}

namespace {

struct OrderOutcome {
  EigenResult eigen;
  int digits_used = 0;
};

// Solve one order, escalating precision (and optionally pruning) until the
// overlap factorizes, the iteration converges and the certificate holds.
OrderOutcome solve_order(Pencil& pencil, BasisSet& set, const RunConfig& config, int omega,
                         int& digits_floor, std::vector<BasisTerm>& pruned,
                         const std::optional<Real>& warm_energy,
                         const std::optional<Real>& warm_delta, int threads) {
  const PrecisionPolicy& policy = config.precision;
  int digits = std::max(policy.digits_for(omega), digits_floor);
  int escalations = 0;
  int prunes = 0;

  for (;;) {
    PrecisionContext ctx = make_context(digits, config.k);
    if (pencil.meta.digits != digits) {
      if (pencil.has_exact()) {
        realize(pencil, ctx);
      } else if (config.mode == AssemblyMode::floating) {
        pencil = assemble(set, ctx, AssemblyMode::floating, threads);
      } else {
        extend(pencil, set, ctx, AssemblyMode::exact, threads);  // backfill exact, then
        realize(pencil, ctx);
      }
    }

    const CholeskyResult chol = cholesky(pencil.S, pencil.n, ctx.prec());
    if (!chol.ok) {
      if (config.auto_prune && prunes < 8) {
        const BasisTerm victim = set.terms[chol.fail_index];
        pruned.push_back(victim);
        set.exclusions.push_back(victim);
        set.terms.erase(set.terms.begin() + static_cast<std::ptrdiff_t>(chol.fail_index));
        drop_index(pencil, chol.fail_index);
        pencil.meta.fingerprint = set.fingerprint();
        ++prunes;
        continue;
      }
      if (escalations >= policy.max_escalations)
        throw SolverError("order " + std::to_string(omega) +
                          ": overlap not positive definite at pivot " +
                          std::to_string(chol.fail_index) + " after " +
                          std::to_string(escalations) + " precision escalations");
      digits = policy.escalate(digits);
      digits_floor = std::max(digits_floor, digits);
      ++escalations;
      continue;
    }

    try {
      PrecisionContext solve_ctx = make_context(digits, config.k);
      EigenResult eig =
          solve_pencil_lowest(pencil, pencil.n, solve_ctx, policy, warm_energy, warm_delta);
      if (!eig.certified_lowest)
        throw SolverError("order " + std::to_string(omega) +
                          ": inertia certificate failed at " + std::to_string(digits) +
                          " digits");
      OrderOutcome out;
      out.eigen = std::move(eig);
      out.digits_used = digits;
      return out;
    } catch (const SolverError&) {
      if (escalations >= policy.max_escalations) throw;
      digits = policy.escalate(digits);
      digits_floor = std::max(digits_floor, digits);
      ++escalations;
    }
  }
}

}  // namespace

StudyReport sweep(const RunConfig& config, const std::function<void(const EnergyRecord&)>& progress) {
  if (config.omega_max < 0) throw std::invalid_argument("sweep: omega_max must be nonnegative");
  const int threads = effective_threads(config.threads);
  const PrecisionPolicy& policy = config.precision;

  StudyReport report;
  std::vector<BasisTerm> exclusions = config.exclusions;
  Pencil pencil;
  bool have_pencil = false;
  int digits_floor = 0;
  int omega_start = 0;

  // Resume: adopt the newest checkpoint whose basis fingerprint and digit
  // schedule match what this run would have produced.
  if (config.resume && config.checkpoint_dir) {
    for (int w = config.omega_max; w >= 0; --w) {
      const auto header = checkpoint_peek(*config.checkpoint_dir, w);
      if (!header) continue;
      const BasisSet set = enumerate(w, config.k, config.Z, exclusions);
      if (header->fingerprint != set.fingerprint())
        throw CheckpointError("resume: checkpoint for omega " + std::to_string(w) +
                              " has a mismatched basis fingerprint");
      if (header->k != config.k || header->Z != config.Z)
        throw CheckpointError("resume: checkpoint parameters disagree with the run config");
      const int expected = policy.digits_for(w);
      if (header->digits < expected)
        throw CheckpointError("resume: checkpoint for omega " + std::to_string(w) +
                              " was realized at " + std::to_string(header->digits) +
                              " digits, run needs " + std::to_string(expected));
      pencil = checkpoint_read(*config.checkpoint_dir, w);
      have_pencil = true;
      digits_floor = pencil.meta.digits;
      omega_start = 0;  // earlier records are re-solved from principal blocks
      break;
    }
  }

  std::optional<Real> warm_energy, warm_delta;
  for (int omega = omega_start; omega <= config.omega_max; ++omega) {
    try {
      BasisSet set = enumerate(omega, config.k, config.Z, exclusions);
      const int digits = std::max(policy.digits_for(omega), digits_floor);
      PrecisionContext ctx = make_context(digits, config.k);

      if (!have_pencil) {
        pencil = assemble(set, ctx, config.mode, threads);
        have_pencil = true;
      } else if (pencil.n < set.size()) {
        if (pencil.meta.digits != digits) {
          if (pencil.has_exact()) {
            realize(pencil, ctx);
          } else if (config.mode == AssemblyMode::floating) {
            pencil = assemble(set, ctx, AssemblyMode::floating, threads);
          }
          // exact extension below re-realizes through solve_order if needed
        }
        if (pencil.n < set.size()) extend(pencil, set, ctx, config.mode, threads);
      }

      if (config.checkpoint_dir && pencil.meta.omega == omega && pencil.n == set.size())
        checkpoint_write(pencil, *config.checkpoint_dir);

      // leading principal block of the grown pencil is exactly this order's
      // pencil, so re-solves during resume use n_eff = set.size()
      Pencil* active = &pencil;
      const std::size_t n_eff = set.size();
      if (pencil.n < n_eff)
        throw SolverError("sweep: pencil smaller than basis at order " + std::to_string(omega));

      OrderOutcome outcome;
      if (pencil.n == n_eff) {
        outcome = solve_order(*active, set, config, omega, digits_floor, report.pruned,
                              warm_energy, warm_delta, threads);
        if (!report.pruned.empty()) {
          // keep later enumerations consistent with pruning
          exclusions = config.exclusions;
          exclusions.insert(exclusions.end(), report.pruned.begin(), report.pruned.end());
        }
      } else {
        // resumed: solve the leading block at this order's digits
        PrecisionContext sub_ctx = make_context(std::max(policy.digits_for(omega), digits_floor),
                                                config.k);
        outcome.eigen =
            solve_pencil_lowest(pencil, n_eff, sub_ctx, policy, warm_energy, warm_delta);
        outcome.digits_used = sub_ctx.digits();
        if (!outcome.eigen.certified_lowest)
          throw SolverError("order " + std::to_string(omega) +
                            ": inertia certificate failed on resumed block");
      }

      EnergyRecord rec;
      rec.omega = omega;
      rec.n_basis = static_cast<std::int64_t>(set.size());
      rec.energy = outcome.eigen.energy;
      rec.energy_digits =
          outcome.eigen.energy.fixed_string(outcome.digits_used - policy.tol_guard_digits);
      if (!report.records.empty()) {
        if (!(rec.energy < report.records.back().energy))
          throw SolverError("order " + std::to_string(omega) +
                            ": energy did not decrease (variational descent violated)");
        warm_delta = rec.energy - report.records.back().energy;
      }
      warm_energy = rec.energy;
      report.records.push_back(rec);
      if (progress) progress(report.records.back());
    } catch (const std::exception& e) {
      throw SolverError("sweep failed at omega " + std::to_string(omega) + ": " + e.what());
    }
  }

  report.records = ratios(std::move(report.records));
  report.table_text = format_table(report.records);
  if (report.records.size() >= 6) {
    try {
      report.e_star = extrapolate(report.records);
    } catch (const std::invalid_argument&) {
      report.e_star.reset();
    }
  }
  return report;
}

}  // namespace hyll
