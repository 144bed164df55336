#include <random>

#include "doctest.h"
#include "hyll/assembly.hpp"
#include "hyll/errors.hpp"

using namespace hyll;

namespace {

ExactValue rational_value(const Rational& q) {
  return ExactValue{q, Rational(0), Rational(0), Rational(0)};
}

const BasisTerm ground{0, 0, 0, 0};

}  // namespace

TEST_CASE("potential weight") {
  // -Z(1/r1 + 1/r2) + 1/r12 against the volume weight u(s^2-t^2);
  // (1/r1 + 1/r2) = 4s/(s^2-t^2) cancels the weight's (s^2-t^2) factor
  StuPolynomial z2(Rational(0));
  z2 += StuPolynomial::monomial(Rational(-8), 1, 1, 0, 0, Rational(0));
  z2 += StuPolynomial::monomial(Rational(1), 2, 0, 0, 0, Rational(0));
  z2 += StuPolynomial::monomial(Rational(-1), 0, 0, 2, 0, Rational(0));
  CHECK(weight_potential(Rational(2)) == z2);

  StuPolynomial z0(Rational(0));
  z0 += StuPolynomial::monomial(Rational(1), 2, 0, 0, 0, Rational(0));
  z0 += StuPolynomial::monomial(Rational(-1), 0, 0, 2, 0, Rational(0));
  CHECK(weight_potential(Rational(0)) == z0);

  StuPolynomial z1(Rational(0));
  z1 += StuPolynomial::monomial(Rational(-4), 1, 1, 0, 0, Rational(0));
  z1 += StuPolynomial::monomial(Rational(1), 2, 0, 0, 0, Rational(0));
  z1 += StuPolynomial::monomial(Rational(-1), 0, 0, 2, 0, Rational(0));
  CHECK(weight_potential(Rational(1)) == z1);
}

TEST_CASE("overlap elements") {
  const BasisSet set = enumerate(2);
  CHECK(overlap_element_exact(ground, ground, set) == rational_value(Rational(1, 2)));
  // <(0,0,0,0)|(1,0,0,0)>: single radial monomial (4/15) 6!/2^7 = 3/2
  CHECK(overlap_element_exact(ground, BasisTerm{1, 0, 0, 0}, set) ==
        rational_value(Rational(3, 2)));
}

TEST_CASE("element symmetry for random pairs") {
  const BasisSet set = enumerate(4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, set.terms.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const BasisTerm a = set.terms[pick(rng)];
    const BasisTerm b = set.terms[pick(rng)];
    CHECK(overlap_element_exact(a, b, set) == overlap_element_exact(b, a, set));
    CHECK(hamiltonian_element_exact(a, b, set) == hamiltonian_element_exact(b, a, set));
  }
}

TEST_CASE("hydrogenic calibration: e^{-as} realized with k = 2a") {
  // closed forms for the product state: T/S = a^2, attraction/S = -2Za,
  // repulsion/S = 5a/8, all exact in the rational representation
  for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
    for (const Rational& Z : {Rational(2), Rational(1), Rational(0)}) {
      BasisSet set;
      set.omega = 0;
      set.k = 2 * a;
      set.Z = Z;
      set.terms = {ground};
      const ExactValue s = overlap_element_exact(ground, ground, set);
      const ExactValue t = kinetic_element_exact(ground, ground, set);
      const ExactValue va = attraction_element_exact(ground, ground, set);
      const ExactValue vr = repulsion_element_exact(ground, ground, set);
      REQUIRE(s.is_rational());
      REQUIRE(t.is_rational());
      CHECK(t.c_one == a * a * s.c_one);
      CHECK(va.c_one == Rational(-2) * Z * a * s.c_one);
      CHECK(vr.c_one == Rational(5) * a / 8 * s.c_one);
    }
  }
}

TEST_CASE("full Rayleigh quotient of the bare exponential is -19/8") {
  const BasisSet set = enumerate(0);
  const ExactValue s = overlap_element_exact(ground, ground, set);
  const ExactValue h = hamiltonian_element_exact(ground, ground, set);
  REQUIRE(s.is_rational());
  REQUIRE(h.is_rational());
  CHECK(s.c_one == Rational(1, 2));
  CHECK(h.c_one / s.c_one == Rational(-19, 8));

  // Z=0: kinetic + repulsion only -> 1 + 5/8
  BasisSet free = set;
  free.Z = Rational(0);
  const ExactValue h0 = hamiltonian_element_exact(ground, ground, free);
  CHECK(h0.c_one / s.c_one == Rational(13, 8));
}

TEST_CASE("assemble omega=0 pencil") {
  const PrecisionContext ctx = make_context(50, Rational(2));
  const BasisSet set = enumerate(0);
  const Pencil p = assemble(set, ctx, AssemblyMode::exact);
  CHECK(p.n == 2);
  CHECK(p.meta.digits == 50);
  CHECK(p.meta.omega == 0);
  CHECK(p.meta.fingerprint == set.fingerprint());
  CHECK(p.S_exact[0] == rational_value(Rational(1, 2)));
  CHECK(p.S.lower(0, 0) == Real(Rational(1, 2), ctx.prec()));
  // realized entries match a fresh realization of the exact entries
  for (std::size_t idx = 0; idx < p.S.packed_size(); ++idx) {
    CHECK(p.S.flat(idx).identical(p.S_exact[idx].realize(ctx)));
    CHECK(p.H.flat(idx).identical(p.H_exact[idx].realize(ctx)));
  }
}

TEST_CASE("incremental consistency: leading block equals the smaller pencil") {
  const PrecisionContext ctx = make_context(40, Rational(2));
  for (int omega = 1; omega <= 4; ++omega) {
    const Pencil small = assemble(enumerate(omega - 1), ctx, AssemblyMode::exact);
    const Pencil big = assemble(enumerate(omega), ctx, AssemblyMode::exact);
    for (std::size_t idx = 0; idx < small.S.packed_size(); ++idx) {
      CHECK(small.S_exact[idx] == big.S_exact[idx]);
      CHECK(small.H_exact[idx] == big.H_exact[idx]);
    }
  }
}

TEST_CASE("extend matches fresh assembly bit for bit") {
  const PrecisionContext ctx = make_context(40, Rational(2));
  Pencil grown = assemble(enumerate(1), ctx, AssemblyMode::exact);
  extend(grown, enumerate(3), ctx, AssemblyMode::exact);
  const Pencil fresh = assemble(enumerate(3), ctx, AssemblyMode::exact);
  CHECK(grown.n == fresh.n);
  CHECK(grown.meta.fingerprint == fresh.meta.fingerprint);
  CHECK(grown.S.identical(fresh.S));
  CHECK(grown.H.identical(fresh.H));
  for (std::size_t idx = 0; idx < fresh.S.packed_size(); ++idx) {
    CHECK(grown.S_exact[idx] == fresh.S_exact[idx]);
    CHECK(grown.H_exact[idx] == fresh.H_exact[idx]);
  }

  Pencil wrong = assemble(enumerate(1, Rational(2), Rational(1)), ctx, AssemblyMode::exact);
  CHECK_THROWS_AS(extend(wrong, enumerate(3), ctx, AssemblyMode::exact), std::invalid_argument);
}

TEST_CASE("parallel assembly is bit-identical to serial") {
  const PrecisionContext ctx = make_context(40, Rational(2));
  const BasisSet set = enumerate(3);
  const Pencil serial = assemble(set, ctx, AssemblyMode::exact, 1);
  const Pencil parallel = assemble(set, ctx, AssemblyMode::exact, 4);
  CHECK(serial.S.identical(parallel.S));
  CHECK(serial.H.identical(parallel.H));
  for (std::size_t idx = 0; idx < serial.S.packed_size(); ++idx) {
    CHECK(serial.S_exact[idx] == parallel.S_exact[idx]);
    CHECK(serial.H_exact[idx] == parallel.H_exact[idx]);
  }
}

TEST_CASE("floating mode matches exact realization") {
  const PrecisionContext ctx = make_context(40, Rational(2));
  const BasisSet set = enumerate(2);
  const Pencil exact = assemble(set, ctx, AssemblyMode::exact);
  const Pencil floating = assemble(set, ctx, AssemblyMode::floating, 2);
  CHECK(!floating.has_exact());
  CHECK(exact.S.identical(floating.S));
  CHECK(exact.H.identical(floating.H));
}

TEST_CASE("re-realization at higher precision") {
  const PrecisionContext lo = make_context(40, Rational(2));
  Pencil p = assemble(enumerate(2), lo, AssemblyMode::exact);
  const PrecisionContext hi = make_context(60, Rational(2));
  realize(p, hi);
  CHECK(p.meta.digits == 60);
  const Pencil fresh = assemble(enumerate(2), hi, AssemblyMode::exact);
  CHECK(p.S.identical(fresh.S));
  CHECK(p.H.identical(fresh.H));

  Pencil floating = assemble(enumerate(1), lo, AssemblyMode::floating);
  CHECK_THROWS_AS(realize(floating, hi), SolverError);
}

TEST_CASE("drop_index removes one row and column") {
  const PrecisionContext ctx = make_context(40, Rational(2));
  Pencil p = assemble(enumerate(1), ctx, AssemblyMode::exact);
  const Pencil orig = p;
  drop_index(p, 1);
  CHECK(p.n == orig.n - 1);
  std::size_t src_i = 0;
  for (std::size_t i = 0; i < p.n; ++i, ++src_i) {
    if (src_i == 1) ++src_i;
    std::size_t src_j = 0;
    for (std::size_t j = 0; j <= i; ++j, ++src_j) {
      if (src_j == 1) ++src_j;
      CHECK(p.S.lower(i, j).identical(orig.S.at(src_i, src_j)));
      CHECK(p.H.lower(i, j).identical(orig.H.at(src_i, src_j)));
    }
  }
}
