#ifndef HYLL_REFERENCE_DATA_HPP
#define HYLL_REFERENCE_DATA_HPP

#include <string>
#include <vector>

#include "hyll/convergence.hpp"
#include "hyll/table_format.hpp"

namespace hyll {

// Published F-basis convergence rows (omega = 36..50, k = 2) in their
// printed incremental-digit form, and the published extrapolated limit.
const std::vector<PrintedRow>& reference_printed_rows();
const std::string& reference_limit_digits();
Real reference_limit(mpfr_prec_t prec);

// Full-precision reconstruction of the printed rows against the limit.
std::vector<EnergyRecord> reconstruct_reference();

// Reference JSON schema:
// {"rows":[{"omega":..,"n_paper":..,"energy_digits":".."},...],
//  "e_star_digits":"..."}
std::string reference_to_json(const std::vector<EnergyRecord>& records,
                              const std::string& e_star_digits);
struct ReferenceFile {
  std::vector<EnergyRecord> records;
  std::string e_star_digits;
};
ReferenceFile reference_from_json(const std::string& text);
ReferenceFile load_reference_file(const std::string& path);

}  // namespace hyll

#endif  // HYLL_REFERENCE_DATA_HPP
