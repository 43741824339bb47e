#include <doctest.h>

#include "vkt/bracket.hpp"
#include "vkt/errors.hpp"
#include "vkt/nets.hpp"
#include "vkt/recoupling.hpp"

using namespace vkt;

namespace {
bool near(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("admissibility") {
  CHECK(admissible(1, 1, 0, 3));
  CHECK(admissible(1, 1, 2, 4));
  CHECK_FALSE(admissible(1, 1, 2, 3));  // a + b + c > 2r - 4
  CHECK_FALSE(admissible(1, 2, 2, 5));  // odd sum
  CHECK_FALSE(admissible(0, 1, 3, 6));  // triangle inequality
  CHECK_FALSE(admissible(-1, 1, 0, 6));
}

TEST_CASE("theta and tet against net evaluation") {
  for (int r = 3; r <= 6; ++r) {
    const RootParams ctx = RootParams::at_level(r);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          if (admissible(a, b, c, r)) CHECK(near(theta(a, b, c, ctx), theta_net(a, b, c).evaluate(ctx)));
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int e = 0; e <= 2; e += 2)
          for (int c = 0; c <= 2; ++c)
            for (int d = 0; d <= 2; ++d)
              for (int f = 0; f <= 2; ++f)
                if (admissible(a, d, e, r) && admissible(b, c, e, r) && admissible(a, b, f, r) && admissible(c, d, f, r))
                  CHECK(near(tet(a, b, e, c, d, f, ctx), tet_net(a, b, e, c, d, f).evaluate(ctx)));
  }
}

TEST_CASE("theta special values") {
  const RootParams ctx = RootParams::at_level(7);
  for (int a = 0; a <= 5; ++a) CHECK(near(theta(a, a, 0, ctx), delta(a, ctx)));
  CHECK(near(theta(1, 1, 2, ctx), theta(2, 1, 1, ctx)));
  CHECK(near(theta(0, 0, 0, ctx), 1.0));
  // An inadmissible net evaluates to zero.
  CHECK(near(theta_net(1, 1, 1).evaluate(ctx), 0.0));
}

TEST_CASE("bead removal") {
  for (int r = 4; r <= 6; ++r) {
    const RootParams ctx = RootParams::at_level(r);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          for (int y = 0; y <= 2; ++y)
            for (int z = 0; z <= 2; ++z) {
              if (!admissible(a, b, c, r) || !admissible(c, y, z, r)) continue;
              const Complex beaded = beaded_theta_net(a, b, c, y, z).evaluate(ctx);
              CHECK(near(beaded, bead_removal_coeff(a, b, c, ctx) * theta(c, y, z, ctx)));
            }
  }
}

TEST_CASE("recoupling matrices are mutually inverse") {
  for (int r = 5; r <= 7; ++r) {
    const RootParams ctx = RootParams::at_level(r);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          for (int d = 0; d <= 2; ++d)
            for (int j = 0; j <= 4; ++j)
              for (int jp = 0; jp <= 4; ++jp) {
                if (!admissible(a, b, j, r) || !admissible(c, d, j, r)) continue;
                if (!admissible(a, b, jp, r) || !admissible(c, d, jp, r)) continue;
                Complex sum = 0;
                for (int i = 0; i <= 4; ++i) {
                  if (!admissible(a, d, i, r) || !admissible(b, c, i, r)) continue;
                  sum += recoupling_coeff(a, b, c, d, i, j, ctx) * recoupling_coeff(d, a, b, c, jp, i, ctx);
                }
                CHECK(near(sum, j == jp ? 1.0 : 0.0, 1e-8));
              }
  }
}

TEST_CASE("twist eigenvalues resolve a crossing of two strands") {
  // A kink between two parallel 1-strands, resolved in the fusion basis, reproduces the
  // unreduced bracket of the kinked unknot.
  for (int r = 4; r <= 7; ++r) {
    const RootParams ctx = RootParams::at_level(r);
    Complex sum = 0;
    for (int i = 0; i <= 2; i += 2)
      if (admissible(1, 1, i, r)) sum += crossing_coeff(1, 1, i, ctx) * theta(1, 1, i, ctx);
    CHECK(near(sum, bracket_unreduced(builtin("kink-"), ctx)));
    CHECK(near(lambda_twist(1, 1, 0, ctx) * lambda_twist(1, 1, 0, ctx, true), 1.0));
  }
}

TEST_CASE("tabulated example sums") {
  // Printed values for the two worked examples.
  CHECK(near(example_sums(ExampleVariant::K, 3), {0.0, 0.0}, 1e-5));
  CHECK(near(example_sums(ExampleVariant::KHat, 3), {1.0, 1.0}, 1e-5));
  CHECK(near(example_sums(ExampleVariant::K, 4), {1.29289, 1.70711}, 1e-5));
  CHECK(near(example_sums(ExampleVariant::KHat, 4), {1.23044, 0.92388}, 1e-5));
  CHECK_THROWS_AS(example_sums(ExampleVariant::K, 5), DomainError);
  CHECK(near(example_graph_value(1, 2, 4), RootParams::at_level(4).d));
  CHECK(near(example_graph_value(2, 2, 4), 0.0));
}
