#include "hyll/output.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hyll {

std::string report_to_json(const StudyReport& report) {
  nlohmann::ordered_json arr = nlohmann::json::array();
  for (const EnergyRecord& r : report.records) {
    nlohmann::ordered_json row;
    row["omega"] = r.omega;
    row["n_basis"] = r.n_basis;
    row["energy"] = r.energy.roundtrip_string();
    row["delta"] = r.delta ? nlohmann::ordered_json(r.delta->roundtrip_string())
                           : nlohmann::ordered_json(nullptr);
    row["ratio"] = r.ratio ? nlohmann::ordered_json(r.ratio->roundtrip_string())
                           : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::string report_to_csv(const StudyReport& report) {
  std::ostringstream os;
  os << "omega,N,energy,delta,ratio\n";
  for (const EnergyRecord& r : report.records) {
    os << r.omega << "," << r.n_basis << "," << r.energy.roundtrip_string() << ",";
    if (r.delta) os << r.delta->roundtrip_string();
    os << ",";
    if (r.ratio) os << r.ratio->roundtrip_string();
    os << "\n";
  }
  return os.str();
}

std::string report_to_table(const StudyReport& report) {
  std::string out = report.table_text;
  if (report.e_star) {
    out += "\nextrapolated limit: " + report.e_star->value.fixed_string(40) + " +- " +
           report.e_star->uncertainty.scientific_string(3) + "\n";
  }
  return out;
}

int run(const RunConfig& config, OutputKind output, std::ostream& out, std::ostream& err) {
  try {
    const StudyReport report = sweep(config);
    switch (output) {
      case OutputKind::table:
        out << report_to_table(report);
        break;
      case OutputKind::csv:
        out << report_to_csv(report);
        break;
      case OutputKind::json:
        out << report_to_json(report);
        break;
    }
    out.flush();
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hyll
