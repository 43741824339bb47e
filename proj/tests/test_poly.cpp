#include <doctest.h>

#include <random>

#include "vkt/delta_fraction.hpp"
#include "vkt/errors.hpp"
#include "vkt/laurent.hpp"
#include "vkt/roots.hpp"

using namespace vkt;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t)
    p += LaurentPoly::monomial(static_cast<int>(rng() % 13) - 6, static_cast<LaurentPoly::Coeff>(rng() % 7) - 3);
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic is a commutative ring") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == LaurentPoly());
    if (!b.is_zero()) {
      const auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
    const std::complex<double> z = std::polar(1.0, 0.37);
    CHECK(std::abs((a * b).evaluate(z) - a.evaluate(z) * b.evaluate(z)) < 1e-9);
  }
}

TEST_CASE("laurent printing and substitutions") {
  const LaurentPoly p = -LaurentPoly::monomial(4) - LaurentPoly::monomial(-4);
  CHECK(p.to_string() == "-A^4 - A^-4");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK((-LaurentPoly::monomial(3)).to_string() == "-A^3");
  CHECK(LaurentPoly::loop() == -LaurentPoly::monomial(2) - LaurentPoly::monomial(-2));
  CHECK(LaurentPoly::monomial(3, 2).mirrored() == LaurentPoly::monomial(-3, 2));
  CHECK(LaurentPoly::monomial(3).substitute_power(-1) == LaurentPoly::monomial(-3));
  CHECK(LaurentPoly::loop().pow(0) == LaurentPoly(1));
  CHECK_FALSE((LaurentPoly::A() + 1).divide_exact(LaurentPoly::A() - 1).has_value());
}

TEST_CASE("delta polynomials satisfy the Chebyshev recursion") {
  const LaurentPoly d = LaurentPoly::loop();
  CHECK(delta_poly(-1) == LaurentPoly());
  CHECK(delta_poly(0) == LaurentPoly(1));
  CHECK(delta_poly(1) == d);
  for (int n = 1; n < 10; ++n) CHECK(delta_poly(n + 1) == d * delta_poly(n) - delta_poly(n - 1));
}

TEST_CASE("quantum numbers at roots of unity") {
  for (int r = 3; r <= 9; ++r) {
    const RootParams ctx = RootParams::at_level(r);
    CHECK(std::abs(ctx.d - (-2.0 * std::cos(M_PI / r))) < 1e-12);
    CHECK(std::abs(delta(r - 1, ctx)) < 1e-12);
    for (int n = 0; n < r - 1; ++n) {
      CHECK(std::abs(delta(n, ctx) - delta_poly(n).evaluate(ctx.A)) < 1e-9);
      // |Delta_n| = sin((n+1) pi / r) / sin(pi / r).
      CHECK(std::abs(std::abs(delta(n, ctx)) - std::sin((n + 1) * M_PI / r) / std::sin(M_PI / r)) < 1e-9);
    }
    for (int n = 1; n <= r; ++n) CHECK(std::abs(qint(n, ctx) - qint_poly(n).evaluate(ctx.A)) < 1e-9);
    CHECK(std::abs(qfact(0, ctx) - 1.0) < 1e-12);
    CHECK_THROWS_AS(qfact(r, ctx), DomainError);
    CHECK_THROWS_AS(qfact(-1, ctx), DomainError);
  }
  CHECK_THROWS_AS(RootParams::at_level(1), DomainError);
}

TEST_CASE("complex formatting") {
  CHECK(format_complex({0.0, 0.7071067811}) == "0.707107i");
  CHECK(format_complex({-0.517982, 0.135299}) == "-0.517982+0.135299i");
  CHECK(format_complex({1.0, -1.0}) == "1-i");
  CHECK(format_complex({1.0, 1.0}) == "1+i");
  CHECK(format_complex({1e-12, -3e-13}) == "0");
  CHECK(format_complex({-2.5, 0.0}) == "-2.5");
  CHECK(format_complex({0.0, -0.25}) == "-0.25i");
}

TEST_CASE("delta fractions") {
  const DeltaFraction d(LaurentPoly::loop());
  CHECK(d * DeltaFraction::inverse_delta(1) == DeltaFraction(1));
  for (int k = 1; k <= 5; ++k) {
    CHECK(DeltaFraction(delta_poly(k)) * DeltaFraction::inverse_delta(k) == DeltaFraction(1));
    CHECK(DeltaFraction::inverse_delta(k).denominator_exponent(k) == 1);
  }
  // 1/Delta_1 + 1/Delta_1 = 2/Delta_1, and the exponent drops once the factor cancels.
  const DeltaFraction x = DeltaFraction::inverse_delta(1) + DeltaFraction::inverse_delta(1);
  CHECK(x * d == DeltaFraction(2));
  CHECK((x - x).is_zero());
  const DeltaFraction y = DeltaFraction(delta_poly(2)) * DeltaFraction::inverse_delta(3);
  const std::complex<double> A = std::polar(1.0, 0.3);
  CHECK(std::abs(y.evaluate(A) - delta_poly(2).evaluate(A) / delta_poly(3).evaluate(A)) < 1e-12);
  CHECK(DeltaFraction::inverse_delta(2).to_string() == "(1) / Delta_2");
}
