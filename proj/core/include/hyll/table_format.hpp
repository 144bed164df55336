#ifndef HYLL_TABLE_FORMAT_HPP
#define HYLL_TABLE_FORMAT_HPP

#include <string>
#include <vector>

#include "hyll/convergence.hpp"

namespace hyll {

// One row of the incremental-digit table: energies are printed in 5-digit
// groups, leading groups equal to the previous row are elided, and a ``
// ditto mark flags that at least one group was left out.
struct PrintedRow {
  int omega = 0;
  std::int64_t n_basis = 0;
  std::string energy_text;
  std::string ratio_text;  // empty when no ratio is printed
};

// Formats records (using each record's energy_digits rendering) under the
// deterministic convention: elide every leading complete group equal to
// the previous row's, emit `` iff at least one group was elided, print
// whatever digits remain. The first row prints in full.
std::vector<PrintedRow> format_rows(const std::vector<EnergyRecord>& records, int group = 5);

// Same rows laid out as an aligned text table with a header line.
std::string format_table(const std::vector<EnergyRecord>& records, int group = 5);

// Reconstructs full-precision energies from printed rows by aligning each
// row's digit groups against the previous row and the anchor digit string
// (the extrapolated limit). The reconstruction is accepted only when every
// recomputable printed ratio matches within +-0.15 and the final row sits
// within one last-delta of the anchor; ambiguous alignments throw
// TableParseError listing the candidates rather than guessing.
std::vector<EnergyRecord> parse_reference_table(const std::vector<PrintedRow>& rows,
                                                const std::string& anchor_digits);

}  // namespace hyll

#endif  // HYLL_TABLE_FORMAT_HPP
