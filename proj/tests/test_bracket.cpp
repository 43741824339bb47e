#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "random_diagrams.hpp"
#include "vkt/bracket.hpp"
#include "vkt/errors.hpp"

using namespace vkt;

namespace {
LaurentPoly mono(int e, LaurentPoly::Coeff c = 1) { return LaurentPoly::monomial(e, c); }
}  // namespace

TEST_CASE("bracket anchors") {
  CHECK(bracket_reduced(builtin("unknot")) == LaurentPoly(1));
  CHECK(bracket_reduced(builtin("kink+")) == -mono(3));
  CHECK(bracket_reduced(builtin("kink-")) == -mono(-3));
  CHECK(bracket_reduced(builtin("hopf+")) == -mono(4) - mono(-4));
  CHECK(bracket_unreduced(builtin("unknot")) == LaurentPoly::loop());
  CHECK(bracket_reduced(builtin("unlink2")) == LaurentPoly::loop());
  CHECK(bracket_unreduced(Diagram()) == LaurentPoly(1));
}

TEST_CASE("bracket agrees with the enumeration oracle on builtins") {
  for (const auto& name : builtin_names()) {
    const Diagram d = builtin(name);
    CHECK(bracket_reduced(d) == oracle::bracket(d, true));
    CHECK(bracket_unreduced(d) == oracle::bracket(d, false));
    CHECK(state_sum_by_enumeration(network_from_diagram(d), true) == bracket_reduced(d));
  }
}

TEST_CASE("bracket agrees with the enumeration oracle on random virtual diagrams") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int c = 1 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % 3);
    const Diagram d = testing_support::random_diagram(rng, c, k);
    CHECK(bracket_reduced(d) == oracle::bracket(d, true));
  }
}

TEST_CASE("bracket of cables agrees with the oracle") {
  const Diagram f2 = cable(builtin("figure8"), 2);
  CHECK(bracket_unreduced(f2) == state_sum_by_enumeration(network_from_diagram(f2), false));
  const Diagram v3 = cable(builtin("vtrefoil"), 3);
  CHECK(bracket_reduced(v3) == oracle::bracket(v3, true));
}

TEST_CASE("worked values on small knots") {
  CHECK(bracket_reduced(builtin("trefoil")) == -mono(5) - mono(-3) + mono(-7));
  CHECK(bracket_reduced(builtin("vtrefoil")) == mono(2) + 1 - mono(-4));
  CHECK(bracket_reduced(builtin("vhopf")) == mono(1) + mono(-1));
  CHECK(bracket_reduced(builtin("figure8")) == mono(8) - mono(4) + 1 - mono(-4) + mono(-8));
}

TEST_CASE("mirror image inverts A") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Diagram d = testing_support::random_diagram(rng, 1 + static_cast<int>(rng() % 7), 2);
    CHECK(bracket_reduced(testing_support::mirror(d)) == bracket_reduced(d).mirrored());
  }
}

TEST_CASE("complex evaluation matches polynomial evaluation") {
  for (int r = 3; r <= 7; ++r) {
    const RootParams ctx = RootParams::at_level(r);
    for (const auto& name : builtin_names()) {
      const Diagram d = builtin(name);
      CHECK(std::abs(bracket_unreduced(d, ctx) - bracket_unreduced(d).evaluate(ctx.A)) < 1e-9);
      CHECK(std::abs(bracket_reduced(d, ctx) - bracket_reduced(d).evaluate(ctx.A)) < 1e-9);
    }
  }
}

TEST_CASE("f polynomial and jones polynomial") {
  CHECK(f_poly(builtin("kink+")) == LaurentPoly(1));
  CHECK(f_poly(builtin("kink-")) == LaurentPoly(1));
  CHECK(f_poly(builtin("paperK")) == f_poly(builtin("paperKhat")));
  CHECK(jones(builtin("unknot")).to_string() == "1");
  CHECK(jones(builtin("trefoil")).to_string() == "-t^4 + t^3 + t");
  CHECK(jones(testing_support::mirror(builtin("trefoil"))).to_string() == "t^-1 + t^-3 - t^-4");
  CHECK(jones(builtin("figure8")).to_string() == "t^2 - t + 1 - t^-1 + t^-2");
  // Links have half-integer powers.
  CHECK(jones(builtin("hopf+")).to_string() == "-t^(5/2) - t^(1/2)");
}

TEST_CASE("loops of individual states") {
  const Diagram k = builtin("kink+");
  CHECK(loops(k, {Smoothing::Alpha}) == 2);
  CHECK(loops(k, {Smoothing::Beta}) == 1);
  CHECK(loops(builtin("unlink2"), {}) == 2);
}

TEST_CASE("crossing budget") {
  CHECK(crossing_budget() >= 1);
  const Diagram big = cable(builtin("trefoil"), 4);  // 48 crossings
  CHECK_THROWS_AS(bracket_reduced(big), BudgetError);
  // The enumeration oracle stops well below the contraction engine.
  CHECK_THROWS_AS(state_sum_by_enumeration(network_from_diagram(cable(builtin("trefoil"), 3)), true), BudgetError);
  const Diagram t3 = cable(builtin("trefoil"), 3);
  const RootParams ctx = RootParams::at_level(5);
  CHECK(std::abs(bracket_reduced(t3).evaluate(ctx.A) - bracket_reduced(t3, ctx)) < 1e-8);
}
