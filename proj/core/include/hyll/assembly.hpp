#ifndef HYLL_ASSEMBLY_HPP
#define HYLL_ASSEMBLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyll/basis.hpp"
#include "hyll/context.hpp"
#include "hyll/linalg.hpp"
#include "hyll/radial.hpp"

namespace hyll {

enum class AssemblyMode { exact, floating };

struct PencilMeta {
  int omega = 0;
  Rational k = Rational(2);
  Rational Z = Rational(2);
  int digits = 0;
  std::string fingerprint;
};

// The generalized symmetric eigenproblem H c = E S c over a basis set.
// In exact mode every entry is also kept as a rational ExactValue, so the
// matrices can be re-realized at a new precision without re-assembly.
struct Pencil {
  std::size_t n = 0;
  PackedSymmetric S;
  PackedSymmetric H;
  std::vector<ExactValue> S_exact;  // packed lower, empty in floating mode
  std::vector<ExactValue> H_exact;
  PencilMeta meta;

  bool has_exact() const { return !S_exact.empty(); }
};

// Potential term times the volume weight u(s^2-t^2):
// (-Z(1/r1+1/r2) + 1/r12) u(s^2-t^2) = -4Z s u + s^2 - t^2.
StuPolynomial weight_potential(const Rational& Z);

// Exact matrix elements over the domain 0 <= t <= u <= s. The kinetic
// element is the first-derivative (Dirichlet) form; the 2*pi^2 angular
// factor is dropped everywhere, it cancels in the Rayleigh quotient.
ExactValue overlap_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set);
ExactValue kinetic_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set);
ExactValue attraction_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set);
ExactValue repulsion_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set);
ExactValue hamiltonian_element_exact(const BasisTerm& a, const BasisTerm& b, const BasisSet& set);

Real overlap_element(const BasisTerm& a, const BasisTerm& b, const BasisSet& set,
                     const PrecisionContext& ctx);
Real hamiltonian_element(const BasisTerm& a, const BasisTerm& b, const BasisSet& set,
                         const PrecisionContext& ctx);

// Full assembly. Entries are independent pure computations; the result is
// bit-identical for any thread count. threads <= 1 runs serially.
Pencil assemble(const BasisSet& set, const PrecisionContext& ctx, AssemblyMode mode,
                int threads = 1);

// Appends the rows for `set`'s new terms to `pencil` (the existing terms
// must be the canonical prefix of `set`). New entries are realized at ctx
// precision; existing realized entries are left untouched.
void extend(Pencil& pencil, const BasisSet& set, const PrecisionContext& ctx, AssemblyMode mode,
            int threads = 1);

// Re-realizes every entry from exact storage at ctx precision.
// Throws SolverError when exact storage is absent.
void realize(Pencil& pencil, const PrecisionContext& ctx);

// Removes one basis index from the pencil (auto-pruning support).
void drop_index(Pencil& pencil, std::size_t index);

}  // namespace hyll

#endif  // HYLL_ASSEMBLY_HPP
