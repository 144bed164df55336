#ifndef HYLL_BASIS_HPP
#define HYLL_BASIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyll/rational.hpp"

namespace hyll {

// One trial function e^{-ks/2} s^l (u/s)^m (t/s)^n, times ln s when q = 1.
// n must be even (spatially symmetric S states).
struct BasisTerm {
  int l = 0;
  int m = 0;
  int n = 0;
  int q = 0;

  int degree() const { return l + m + n; }
  bool valid() const { return l >= 0 && m >= 0 && n >= 0 && n % 2 == 0 && (q == 0 || q == 1); }

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

// Canonical order: ascending total degree; within a degree, descending l,
// then ascending m, then ascending q. Degree-major ordering makes the list
// for omega a strict prefix of the list for omega+1.
bool canonical_less(const BasisTerm& a, const BasisTerm& b);

struct BasisSet {
  int omega = 0;
  Rational k = Rational(2);
  Rational Z = Rational(2);
  std::vector<BasisTerm> terms;
  std::vector<BasisTerm> exclusions;

  std::size_t size() const { return terms.size(); }

  // 16-hex-digit FNV-1a fingerprint of (omega, k, Z, ordered term list);
  // identifies a pencil's row/column ordering.
  std::string fingerprint() const;
};

// All terms with l+m+n <= omega, n even, q in {0,1}, minus `exclusions`,
// in canonical order.
BasisSet enumerate(int omega, const Rational& k = Rational(2), const Rational& Z = Rational(2),
                   const std::vector<BasisTerm>& exclusions = {});

// Size of the unpruned enumeration at order omega:
// 2 * sum over even n <= omega of (omega-n+1)(omega-n+2)/2.
std::int64_t count(int omega);

// 0-based position of `term` in `set`; throws std::out_of_range when absent.
std::size_t canonical_index(const BasisTerm& term, const BasisSet& set);

// JSON document {omega, k, Z, exclusions[], terms[[l,m,n,q]...]}.
std::string basis_to_json(const BasisSet& set);
BasisSet basis_from_json(const std::string& text);

}  // namespace hyll

#endif  // HYLL_BASIS_HPP
