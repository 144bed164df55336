#include "hyll/convergence.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyll {

std::vector<EnergyRecord> ratios(std::vector<EnergyRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const EnergyRecord& a, const EnergyRecord& b) { return a.omega < b.omega; });
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].delta.reset();
    records[i].ratio.reset();
    records[i].ratio_omitted_zero_delta = false;
  }
  for (std::size_t i = 1; i < records.size(); ++i)
    records[i].delta = records[i].energy - records[i - 1].energy;
  for (std::size_t i = 1; i + 1 < records.size(); ++i) {
    const Real& d_here = *records[i].delta;
    const Real& d_next = *records[i + 1].delta;
    if (d_next.is_zero()) {
      records[i].ratio_omitted_zero_delta = true;
      continue;
    }
    records[i].ratio = d_here / d_next;
  }
  return records;
}

namespace {

// limit of one parity class: E(last) plus the closed-form geometric tail
Real parity_limit(const std::vector<const EnergyRecord*>& seq, mpfr_prec_t prec) {
  const std::size_t n = seq.size();
  const Real d_last =
      seq[n - 1]->energy.rounded_to(prec) - seq[n - 2]->energy.rounded_to(prec);
  const Real d_prev =
      seq[n - 2]->energy.rounded_to(prec) - seq[n - 3]->energy.rounded_to(prec);
  if (d_last.is_zero()) return seq[n - 1]->energy.rounded_to(prec);
  const Real r = d_prev / d_last;
  if (r <= Real(1L, prec))
    throw std::invalid_argument("extrapolate: two-step tail ratio is not > 1");
  return seq[n - 1]->energy.rounded_to(prec) + d_last / (r - Real(1L, prec));
}

}  // namespace

Extrapolation extrapolate(const std::vector<EnergyRecord>& records) {
  if (records.size() < 6)
    throw std::invalid_argument("extrapolate: need at least 6 records");
  std::vector<EnergyRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const EnergyRecord& a, const EnergyRecord& b) { return a.omega < b.omega; });

  mpfr_prec_t prec = Real::kMinPrec;
  for (const EnergyRecord& r : sorted) prec = std::max(prec, r.energy.precision());
  prec += 64;

  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i].energy < sorted[i - 1].energy))
      throw std::invalid_argument("extrapolate: energies are not strictly decreasing");

  // split by omega parity; each class needs three members for two D's
  std::vector<const EnergyRecord*> even, odd;
  for (const EnergyRecord& r : sorted)
    (r.omega % 2 == 0 ? even : odd).push_back(&r);
  if (even.size() < 3 || odd.size() < 3)
    throw std::invalid_argument("extrapolate: need three records of each parity");

  const Real lim_even = parity_limit(even, prec);
  const Real lim_odd = parity_limit(odd, prec);

  Extrapolation out;
  out.value = (lim_even + lim_odd) / Real(2L, prec);
  const Real last_delta = sorted.back().energy.rounded_to(prec) -
                          sorted[sorted.size() - 2].energy.rounded_to(prec);
  out.uncertainty = abs(lim_even - lim_odd) / Real(2L, prec) + abs(last_delta);
  return out;
}

}  // namespace hyll
