#include "hyll/table_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hyll/errors.hpp"
#include "hyll/rational.hpp"

namespace hyll {

namespace {

struct DecimalParts {
  std::string sign;      // "-" or ""
  std::string int_part;  // digits before the point
  std::string frac;      // digits after the point
};

DecimalParts split_decimal(const std::string& text) {
  DecimalParts p;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') p.sign = "-";
    ++pos;
  }
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    p.int_part += text[pos++];
  if (pos < text.size() && text[pos] == '.') ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    p.frac += text[pos++];
  if (pos != text.size() || p.int_part.empty())
    throw TableParseError("split_decimal: cannot parse '" + text + "'");
  return p;
}

std::vector<std::string> chunk(const std::string& digits, int group) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < digits.size(); i += static_cast<std::size_t>(group))
    out.push_back(digits.substr(i, static_cast<std::size_t>(group)));
  return out;
}

std::string join(const std::vector<std::string>& groups, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < groups.size(); ++i) {
    if (!out.empty()) out += " ";
    out += groups[i];
  }
  return out;
}

std::string ratio_text_of(const EnergyRecord& r) {
  if (!r.ratio) return "";
  const double v = r.ratio->to_double();
  char buf[64];
  if (v >= 100.0 || v <= -100.0)
    std::snprintf(buf, sizeof buf, "%.0f", v);
  else if (v >= 10.0 || v <= -10.0)
    std::snprintf(buf, sizeof buf, "%.1f", v);
  else
    std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::vector<PrintedRow> format_rows(const std::vector<EnergyRecord>& records, int group) {
  if (group < 1) throw std::invalid_argument("format_rows: group must be positive");
  std::vector<PrintedRow> rows;
  rows.reserve(records.size());
  DecimalParts prev;
  std::vector<std::string> prev_groups;
  bool have_prev = false;

  for (const EnergyRecord& rec : records) {
    const DecimalParts parts = split_decimal(rec.energy_digits);
    const std::vector<std::string> groups = chunk(parts.frac, group);

    PrintedRow row;
    row.omega = rec.omega;
    row.n_basis = rec.n_basis;
    row.ratio_text = ratio_text_of(rec);

    std::size_t shared = 0;
    if (have_prev && parts.sign == prev.sign && parts.int_part == prev.int_part) {
      const std::size_t lim = std::min(groups.size(), prev_groups.size());
      while (shared < lim &&
             groups[shared].size() == static_cast<std::size_t>(group) &&
             prev_groups[shared].size() == static_cast<std::size_t>(group) &&
             groups[shared] == prev_groups[shared])
        ++shared;
      if (shared >= groups.size() && shared > 0) --shared;  // keep one group visible
    }
    if (shared == 0)
      row.energy_text = parts.sign + parts.int_part + "." + join(groups, 0);
    else
      row.energy_text = "`` " + join(groups, shared);

    rows.push_back(std::move(row));
    prev = parts;
    prev_groups = groups;
    have_prev = true;
  }
  return rows;
}

std::string format_table(const std::vector<EnergyRecord>& records, int group) {
  const std::vector<PrintedRow> rows = format_rows(records, group);
  std::size_t w_omega = 5, w_n = 6, w_energy = 8;
  for (const PrintedRow& r : rows) {
    w_omega = std::max(w_omega, std::to_string(r.omega).size());
    w_n = std::max(w_n, std::to_string(r.n_basis).size());
    w_energy = std::max(w_energy, r.energy_text.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  auto lpad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  os << lpad("omega", w_omega) << "  " << lpad("N", w_n) << "  " << pad("Energies", w_energy)
     << "  " << "Ratios" << "\n";
  for (const PrintedRow& r : rows) {
    os << lpad(std::to_string(r.omega), w_omega) << "  " << lpad(std::to_string(r.n_basis), w_n)
       << "  " << pad(r.energy_text, w_energy) << "  " << r.ratio_text << "\n";
  }
  return os.str();
}

namespace {

constexpr int kGroup = 5;

struct ParsedRowText {
  bool ditto = false;
  bool absolute = false;  // carries sign and integer part
  DecimalParts abs_parts;
  std::vector<std::string> groups;
};

ParsedRowText parse_energy_text(const std::string& text) {
  ParsedRowText out;
  std::istringstream is(text);
  std::string tok;
  bool first = true;
  while (is >> tok) {
    if (first && (tok == "``" || tok == "\"")) {
      out.ditto = true;
      first = false;
      continue;
    }
    if (first && tok.find_first_not_of("0123456789") != std::string::npos) {
      // absolute form: sign / integer part / point embedded in the token(s)
      out.absolute = true;
      std::string rest;
      std::string tail;
      while (is >> tail) rest += tail;
      out.abs_parts = split_decimal(tok + rest);
      out.groups = chunk(out.abs_parts.frac, kGroup);
      return out;
    }
    first = false;
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw TableParseError("parse_energy_text: bad group '" + tok + "' in '" + text + "'");
    out.groups.push_back(tok);
  }
  if (out.groups.empty())
    throw TableParseError("parse_energy_text: no digit groups in '" + text + "'");
  for (std::size_t i = 0; i + 1 < out.groups.size(); ++i)
    if (out.groups[i].size() != kGroup)
      throw TableParseError("parse_energy_text: interior group of wrong width in '" + text +
                            "'");
  if (out.groups.back().size() > kGroup)
    throw TableParseError("parse_energy_text: trailing group too wide in '" + text + "'");
  return out;
}

// -1: a < b, +1: a > b, 0: equal over the common length (undecidable)
int compare_frac(const std::string& a, const std::string& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

Rational frac_value(const std::string& frac) {
  if (frac.empty()) return Rational(0);
  Integer num(frac, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> parse_printed_ratio(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return rational_from_string(text);
}

struct SearchState {
  const std::vector<PrintedRow>* rows = nullptr;
  std::vector<ParsedRowText> parsed;
  std::vector<std::optional<Rational>> printed_ratios;
  std::string anchor_frac;
  std::string int_part;
  std::string sign;
  std::vector<std::string> fracs;       // chosen fraction strings per row
  std::vector<Rational> values;         // |E| fractional value per row
  std::vector<std::vector<std::string>> solutions;
  Rational tolerance = Rational(15, 100);
};

bool ratio_consistent(const SearchState& st, std::size_t i) {
  // ratio printed at row i compares d(i) = v_i - v_{i-1} against
  // d(i+1) = v_{i+1} - v_i; rows are |E| fractions so deltas are positive
  if (i == 0 || i + 1 >= st.fracs.size()) return true;
  if (!st.printed_ratios[i]) return true;
  const Rational d1 = st.values[i] - st.values[i - 1];
  const Rational d2 = st.values[i + 1] - st.values[i];
  if (d2 == 0) return false;
  const Rational r = d1 / d2;
  Rational dev = r - *st.printed_ratios[i];
  if (dev < 0) dev = -dev;
  return dev <= st.tolerance;
}

void search(SearchState& st, std::size_t i) {
  const std::size_t n_rows = st.rows->size();
  if (i == n_rows) {
    // tail consistency: the anchor lies below the last row by less than
    // the last one-step delta
    const Rational gap = frac_value(st.anchor_frac) - st.values.back();
    const Rational last_delta = st.values[n_rows - 1] - st.values[n_rows - 2];
    if (gap <= 0 || gap >= last_delta) return;
    if (st.solutions.size() < 2) st.solutions.push_back(st.fracs);
    return;
  }
  const ParsedRowText& row = st.parsed[i];

  if (row.absolute) {
    if (row.abs_parts.sign != st.sign || row.abs_parts.int_part != st.int_part) return;
    const std::string frac = row.abs_parts.frac;
    if (compare_frac(frac, st.anchor_frac) >= 0) return;
    if (i > 0 && compare_frac(frac, st.fracs[i - 1]) <= 0) return;
    st.fracs.push_back(frac);
    st.values.push_back(frac_value(frac));
    if (i == 0 || ratio_consistent(st, i - 1)) search(st, i + 1);
    st.fracs.pop_back();
    st.values.pop_back();
    return;
  }

  // copy: st.fracs may reallocate when candidates are pushed below
  const std::string source = i == 0 ? st.anchor_frac : st.fracs[i - 1];
  const std::size_t complete_groups = source.size() / kGroup;
  const std::size_t p_min = row.ditto ? 1 : 0;  // number of elided groups
  for (std::size_t elided = p_min; elided <= complete_groups; ++elided) {
    std::string frac = source.substr(0, elided * kGroup);
    for (const std::string& g : row.groups) frac += g;
    if (compare_frac(frac, st.anchor_frac) >= 0) continue;  // must stay above the limit
    if (i > 0 && compare_frac(frac, st.fracs[i - 1]) <= 0) continue;  // strict descent
    st.fracs.push_back(frac);
    st.values.push_back(frac_value(frac));
    if (i == 0 || ratio_consistent(st, i - 1)) search(st, i + 1);
    st.fracs.pop_back();
    st.values.pop_back();
  }
}

}  // namespace

std::vector<EnergyRecord> parse_reference_table(const std::vector<PrintedRow>& rows,
                                                const std::string& anchor_digits) {
  if (rows.size() < 3)
    throw TableParseError("parse_reference_table: need at least 3 rows");
  const DecimalParts anchor = split_decimal(anchor_digits);

  SearchState st;
  st.rows = &rows;
  st.anchor_frac = anchor.frac;
  st.int_part = anchor.int_part;
  st.sign = anchor.sign;
  st.parsed.reserve(rows.size());
  st.printed_ratios.reserve(rows.size());
  for (const PrintedRow& r : rows) {
    st.parsed.push_back(parse_energy_text(r.energy_text));
    st.printed_ratios.push_back(parse_printed_ratio(r.ratio_text));
  }

  search(st, 0);

  if (st.solutions.empty())
    throw TableParseError("parse_reference_table: no alignment satisfies the anchor, descent, "
                          "ratio and tail constraints");
  if (st.solutions.size() > 1) {
    std::string msg = "parse_reference_table: ambiguous alignment; candidates for row omega=" +
                      std::to_string(rows.front().omega) + ":";
    for (const auto& sol : st.solutions) msg += " [" + sol.front() + "]";
    throw TableParseError(msg);
  }

  const std::vector<std::string>& frac = st.solutions.front();
  std::vector<EnergyRecord> records;
  records.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EnergyRecord rec;
    rec.omega = rows[i].omega;
    rec.n_basis = rows[i].n_basis;
    rec.energy_digits = st.sign + st.int_part + "." + frac[i];
    rec.energy =
        Real::from_string(rec.energy_digits, bits_for_digits(static_cast<int>(frac[i].size()) + 20));
    records.push_back(std::move(rec));
  }
  return ratios(std::move(records));
}

}  // namespace hyll
