#ifndef HYLL_CONVERGENCE_HPP
#define HYLL_CONVERGENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyll/real.hpp"

namespace hyll {

// One row of a convergence sweep.
struct EnergyRecord {
  int omega = 0;
  std::int64_t n_basis = 0;
  Real energy;
  std::string energy_digits;  // decimal rendering, e.g. "-2.9037243770..."
  std::optional<Real> delta;  // E(omega) - E(omega-1)
  std::optional<Real> ratio;  // delta(omega) / delta(omega+1)
  bool ratio_omitted_zero_delta = false;
};

// Fills deltas and successive-difference ratios. The ratio stored at row
// omega is delta(omega)/delta(omega+1); the first row has no delta, the
// last row no ratio. A zero following delta flags the row instead of
// dividing by zero.
std::vector<EnergyRecord> ratios(std::vector<EnergyRecord> records);

struct Extrapolation {
  Real value;
  Real uncertainty;
};

// Geometric tail limit of the sweep. The successive ratios alternate
// between a small and a large value, so two-step differences
// D(omega) = E(omega) - E(omega-2) are formed per parity, the last two
// D's of each parity estimate that parity's geometric ratio, each tail is
// summed in closed form, and the two parity limits are averaged. The
// uncertainty is half the parity spread plus the last one-step delta.
// Requires >= 6 records with strictly decreasing energies; refuses
// (std::invalid_argument) otherwise, or when a tail ratio is not > 1.
Extrapolation extrapolate(const std::vector<EnergyRecord>& records);

}  // namespace hyll

#endif  // HYLL_CONVERGENCE_HPP
