#ifndef HYLL_SWEEP_HPP
#define HYLL_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyll/assembly.hpp"
#include "hyll/convergence.hpp"
#include "hyll/eigensolve.hpp"

namespace hyll {

// Working-digit schedule and retry rules.
struct PrecisionPolicy {
  std::optional<int> fixed_digits;  // explicit --digits; nullopt = auto
  int auto_floor = 50;              // auto schedule: max(50, 30 + 3*omega)
  int auto_offset = 30;
  int auto_slope = 3;
  double escalation_factor = 1.5;  // digits multiplier on factorization failure
  int max_escalations = 3;
  int tol_guard_digits = 10;  // tol = 10^-(digits-10) relative

  int digits_for(int omega) const;
  int escalate(int digits) const;
  Real tol_for(int digits) const;
};

struct RunConfig {
  int omega_max = 0;
  PrecisionPolicy precision;
  Rational k = Rational(2);
  Rational Z = Rational(2);
  AssemblyMode mode = AssemblyMode::exact;
  int threads = 0;  // 0 = hardware concurrency
  std::optional<std::string> checkpoint_dir;
  bool resume = false;
  std::vector<BasisTerm> exclusions;
  bool auto_prune = false;  // drop terms whose pivot makes S non-positive
};

struct StudyReport {
  std::vector<EnergyRecord> records;
  std::optional<Extrapolation> e_star;
  std::string table_text;
  std::vector<BasisTerm> pruned;
};

// Runs the order-by-order study: enumerate, extend the pencil, solve with a
// warm shift, record. Failures escalate precision per policy (re-realizing
// from exact entries when available) before giving up; with auto_prune the
// offending basis term is excluded instead.
StudyReport sweep(const RunConfig& config,
                  const std::function<void(const EnergyRecord&)>& progress = {});

// Solves one realized pencil for its lowest eigenpair with the policy's
// warm-start and tolerance rules. Exposed for reuse and testing.
EigenResult solve_pencil_lowest(const Pencil& pencil, std::size_t n_eff,
                                const PrecisionContext& ctx, const PrecisionPolicy& policy,
                                const std::optional<Real>& warm_energy,
                                const std::optional<Real>& warm_delta);

}  // namespace hyll

#endif  // HYLL_SWEEP_HPP
