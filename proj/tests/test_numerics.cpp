#include <thread>

#include "doctest.h"
#include "hyll/context.hpp"
#include "hyll/rational.hpp"
#include "hyll/real.hpp"

using namespace hyll;

TEST_CASE("harmonic sums") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(3) == Rational(11, 6));
  // independent finite-summation oracle
  Rational direct(0);
  for (int j = 1; j <= 5; ++j) direct += Rational(1, j);
  CHECK(direct == Rational(137, 60));
  CHECK(harmonic(5) == direct);

  CHECK(harmonic2(0) == Rational(0));
  CHECK(harmonic2(2) == Rational(5, 4));
  Rational direct2(0);
  for (int j = 1; j <= 4; ++j) direct2 += Rational(1, j * j);
  CHECK(direct2 == Rational(205, 144));
  CHECK(harmonic2(4) == direct2);
}

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(rational_pow(Rational(2), 10) == Rational(1024));
  CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
  CHECK(rational_pow(Rational(5, 2), 2) == Rational(25, 4));
  CHECK(rational_from_string("5/2") == Rational(5, 2));
  CHECK(rational_from_string("2.5") == Rational(5, 2));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(rational_to_string(Rational(5, 2)) == "5/2");
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("context constants") {
  const PrecisionContext ctx = make_context(50, Rational(2));
  CHECK(ctx.digits() == 50);
  CHECK(ctx.gamma().fixed_string(30).substr(0, 22) == "0.57721566490153286060");
  CHECK(ctx.ln_k().fixed_string(25).substr(0, 17) == "0.693147180559945");

  const PrecisionContext unit = make_context(50, Rational(1));
  CHECK(unit.ln_k().is_zero());
  CHECK(unit.lambda() == unit.gamma());

  const PrecisionContext small = make_context(30, Rational(2));
  CHECK(small.ln_k().fixed_string(25).substr(0, 17) == "0.693147180559945");

  CHECK_THROWS_AS(make_context(29, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_context(50, Rational(0)), std::invalid_argument);
}

TEST_CASE("precision monotonicity of cached constants") {
  for (int digits : {30, 50, 80}) {
    const PrecisionContext lo = make_context(digits, Rational(2));
    const PrecisionContext hi = make_context(digits + 20, Rational(2));
    CHECK(hi.gamma().rounded_to(lo.prec()).identical(lo.gamma()));
    CHECK(hi.pi_squared().rounded_to(lo.prec()).identical(lo.pi_squared()));
    CHECK(hi.ln_k().rounded_to(lo.prec()).identical(lo.ln_k()));
    CHECK(hi.lambda().rounded_to(lo.prec()).identical(lo.lambda()));
  }
}

TEST_CASE("real arithmetic basics") {
  const mpfr_prec_t prec = bits_for_digits(40);
  Real a(Rational(1, 3), prec);
  Real b(Rational(1, 6), prec);
  CHECK((a + b) == Real(Rational(1, 2), prec));
  CHECK((a - b) == Real(Rational(1, 6), prec));
  CHECK((a * Real(3L, prec)) == Real(1L, prec));
  CHECK(abs(-a) == a);
  CHECK(sqrt(Real(Rational(9, 4), prec)) == Real(Rational(3, 2), prec));
  CHECK(Real(Rational(-1, 2), prec).is_negative());
  CHECK(pow10(-3, prec) == Real(Rational(1, 1000), prec));
}

TEST_CASE("roundtrip decimal strings restore exact bits") {
  const mpfr_prec_t prec = bits_for_digits(47);
  const PrecisionContext ctx = make_context(47, Rational(2));
  for (const Real& v : {ctx.gamma(), ctx.lambda_squared(), -ctx.pi_squared(),
                        Real(Rational(22, 7), prec), Real(0L, prec)}) {
    const std::string s = v.roundtrip_string();
    CHECK(Real::from_string(s, v.precision()).identical(v));
  }
}

TEST_CASE("deterministic arithmetic across threads") {
  auto compute = [] {
    const PrecisionContext ctx = make_context(45, Rational(2));
    Real acc(ctx.prec());
    for (int i = 1; i <= 50; ++i) {
      acc += ctx.gamma() / Real(static_cast<long>(i), ctx.prec());
      acc *= ctx.pi_squared();
      acc = sqrt(abs(acc));
    }
    return acc.roundtrip_string();
  };
  const std::string here = compute();
  CHECK(compute() == here);
  std::string there;
  std::thread worker([&] { there = compute(); });
  worker.join();
  CHECK(there == here);
}
