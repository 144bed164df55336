#include "hyll/basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace hyll {

bool canonical_less(const BasisTerm& a, const BasisTerm& b) {
  return std::make_tuple(a.degree(), -a.l, a.m, a.q) <
         std::make_tuple(b.degree(), -b.l, b.m, b.q);
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string BasisSet::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, "HYLL1|" + std::to_string(omega) + "|" + rational_to_string(k) + "|" +
                   rational_to_string(Z) + "|");
  for (const BasisTerm& t : terms) {
    h = fnv1a(h, std::to_string(t.l) + "," + std::to_string(t.m) + "," + std::to_string(t.n) +
                     "," + std::to_string(t.q) + ";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

BasisSet enumerate(int omega, const Rational& k, const Rational& Z,
                   const std::vector<BasisTerm>& exclusions) {
  if (omega < 0) throw std::invalid_argument("enumerate: omega must be nonnegative");
  for (const BasisTerm& e : exclusions)
    if (!e.valid()) throw std::invalid_argument("enumerate: invalid exclusion term");

  BasisSet set;
  set.omega = omega;
  set.k = k;
  set.Z = Z;
  set.exclusions = exclusions;
  std::sort(set.exclusions.begin(), set.exclusions.end(), canonical_less);
  set.exclusions.erase(std::unique(set.exclusions.begin(), set.exclusions.end()),
                       set.exclusions.end());

  for (int l = 0; l <= omega; ++l)
    for (int m = 0; m + l <= omega; ++m)
      for (int n = 0; l + m + n <= omega; n += 2)
        for (int q = 0; q <= 1; ++q) {
          BasisTerm t{l, m, n, q};
          if (std::binary_search(set.exclusions.begin(), set.exclusions.end(), t,
                                 canonical_less))
            continue;
          set.terms.push_back(t);
        }
  std::sort(set.terms.begin(), set.terms.end(), canonical_less);
  return set;
}

std::int64_t count(int omega) {
  if (omega < 0) throw std::invalid_argument("count: omega must be nonnegative");
  std::int64_t total = 0;
  for (int n = 0; n <= omega; n += 2) {
    const std::int64_t d = omega - n;
    total += (d + 1) * (d + 2) / 2;
  }
  return 2 * total;
}

std::size_t canonical_index(const BasisTerm& term, const BasisSet& set) {
  const auto it = std::lower_bound(set.terms.begin(), set.terms.end(), term, canonical_less);
  if (it == set.terms.end() || !(*it == term))
    throw std::out_of_range("canonical_index: term not in basis set");
  return static_cast<std::size_t>(it - set.terms.begin());
}

std::string basis_to_json(const BasisSet& set) {
  nlohmann::ordered_json j;
  j["omega"] = set.omega;
  j["k"] = rational_to_string(set.k);
  j["Z"] = rational_to_string(set.Z);
  j["exclusions"] = nlohmann::json::array();
  for (const BasisTerm& t : set.exclusions) j["exclusions"].push_back({t.l, t.m, t.n, t.q});
  j["terms"] = nlohmann::json::array();
  for (const BasisTerm& t : set.terms) j["terms"].push_back({t.l, t.m, t.n, t.q});
  return j.dump(2);
}

BasisSet basis_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BasisSet set;
  set.omega = j.at("omega").get<int>();
  set.k = rational_from_string(j.at("k").get<std::string>());
  set.Z = rational_from_string(j.at("Z").get<std::string>());
  auto read_term = [](const nlohmann::json& e) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("basis_from_json: bad term");
    BasisTerm t{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()};
    if (!t.valid()) throw std::invalid_argument("basis_from_json: invalid term");
    return t;
  };
  for (const auto& e : j.at("exclusions")) set.exclusions.push_back(read_term(e));
  for (const auto& e : j.at("terms")) set.terms.push_back(read_term(e));
  if (!std::is_sorted(set.terms.begin(), set.terms.end(), canonical_less))
    throw std::invalid_argument("basis_from_json: terms not in canonical order");
  return set;
}

}  // namespace hyll
