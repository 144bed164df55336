#ifndef HYLL_OUTPUT_HPP
#define HYLL_OUTPUT_HPP

#include <iosfwd>
#include <string>

#include "hyll/sweep.hpp"

namespace hyll {

enum class OutputKind { table, csv, json };

// JSON array of records; all numeric values are decimal strings.
std::string report_to_json(const StudyReport& report);

// CSV with header omega,N,energy,delta,ratio; empty fields when absent.
std::string report_to_csv(const StudyReport& report);

// Paper-style table plus an extrapolation footer when available.
std::string report_to_table(const StudyReport& report);

// Executes the configured study and writes the chosen output to `out`.
// Returns the process exit status: 0 on success, 1 on computational
// failure (diagnostics on `err`).
int run(const RunConfig& config, OutputKind output, std::ostream& out, std::ostream& err);

}  // namespace hyll

#endif  // HYLL_OUTPUT_HPP
