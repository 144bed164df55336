#include "hyll/reference_data.hpp"

#include <fstream>
#include <sstream>

#include "hyll/errors.hpp"
#include "json.hpp"

namespace hyll {

const std::vector<PrintedRow>& reference_printed_rows() {
  static const std::vector<PrintedRow> rows = {
      {36, 9499, "`` 40438 342", "3.11"},
      {37, 10259, "40444 00495", "11.1"},
      {38, 11057, "40444 51579 435", "3.81"},
      {39, 11897, "`` 65044 4349", "8.65"},
      {40, 12779, "66593 038", "4.84"},
      {41, 13703, "66913 05205", "6.81"},
      {42, 14671, "66960 00893 6", "6.18"},
      {43, 15683, "66967 621", "5.43"},
      {44, 16741, "66969 023", "7.66"},
      {45, 17845, "66969 20593", "4.44"},
      {46, 18997, "`` 24711 8", "9.00"},
      {47, 20197, "25170 030", "3.75"},
      {48, 21447, "25292 13", "9.10"},
      {49, 22747, "25305 571", "3.14"},
      {50, 24099, "25309 838", ""},
  };
  return rows;
}

const std::string& reference_limit_digits() {
  static const std::string digits = "-2.9037243770341195983111592451944044466969253105";
  return digits;
}

Real reference_limit(mpfr_prec_t prec) {
  return Real::from_string(reference_limit_digits(), prec);
}

std::vector<EnergyRecord> reconstruct_reference() {
  return parse_reference_table(reference_printed_rows(), reference_limit_digits());
}

std::string reference_to_json(const std::vector<EnergyRecord>& records,
                              const std::string& e_star_digits) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::json::array();
  for (const EnergyRecord& r : records) {
    nlohmann::ordered_json row;
    row["omega"] = r.omega;
    row["n_paper"] = r.n_basis;
    row["energy_digits"] = r.energy_digits;
    j["rows"].push_back(std::move(row));
  }
  j["e_star_digits"] = e_star_digits;
  return j.dump(2) + "\n";
}

ReferenceFile reference_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ReferenceFile out;
  for (const auto& row : j.at("rows")) {
    EnergyRecord r;
    r.omega = row.at("omega").get<int>();
    r.n_basis = row.at("n_paper").get<std::int64_t>();
    r.energy_digits = row.at("energy_digits").get<std::string>();
    const std::size_t frac = r.energy_digits.size();
    r.energy = Real::from_string(r.energy_digits, bits_for_digits(static_cast<int>(frac) + 20));
    out.records.push_back(std::move(r));
  }
  out.records = ratios(std::move(out.records));
  out.e_star_digits = j.at("e_star_digits").get<std::string>();
  return out;
}

ReferenceFile load_reference_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("load_reference_file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return reference_from_json(ss.str());
}

}  // namespace hyll
