#include "vkt/recoupling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "vkt/errors.hpp"

namespace vkt {

namespace {

void require_admissible(int a, int b, int c, const RootParams& ctx) {
  if (!admissible(a, b, c, ctx.r))
    throw DomainError("triple (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                      ") is not admissible at r=" + std::to_string(ctx.r));
}

// [m]! allowing m >= r, where the factor [r] = 0 makes the value vanish.
Complex qfact_or_zero(int m, const RootParams& ctx) {
  if (m >= ctx.r) return Complex(0.0);
  return qfact(m, ctx);
}

}  // namespace

bool admissible(int a, int b, int c, int r) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a + b < c || b + c < a || a + c < b) return false;
  return a + b + c <= 2 * r - 4;
}

Complex theta(int a, int b, int c, const RootParams& ctx) {
  require_admissible(a, b, c, ctx);
  const int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
  const double sign = (m + n + p) % 2 == 0 ? 1.0 : -1.0;
  return sign * qfact(m + n + p + 1, ctx) * qfact(m, ctx) * qfact(n, ctx) * qfact(p, ctx) /
         (qfact(m + n, ctx) * qfact(n + p, ctx) * qfact(p + m, ctx));
}

Complex tet(int a, int b, int e, int c, int d, int f, const RootParams& ctx) {
  require_admissible(a, d, e, ctx);
  require_admissible(b, c, e, ctx);
  require_admissible(a, b, f, ctx);
  require_admissible(c, d, f, ctx);
  const std::array<int, 4> lo{(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
  const std::array<int, 3> hi{(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
  Complex inner(1.0);
  for (int bj : hi)
    for (int ai : lo) inner *= qfact(bj - ai, ctx);
  Complex edges(1.0);
  for (int x : {a, b, c, d, e, f}) edges *= qfact(x, ctx);

  const int smin = *std::max_element(lo.begin(), lo.end());
  const int smax = *std::min_element(hi.begin(), hi.end());
  Complex sum(0.0);
  for (int s = smin; s <= smax; ++s) {
    Complex den(1.0);
    for (int ai : lo) den *= qfact(s - ai, ctx);
    for (int bj : hi) den *= qfact(bj - s, ctx);
    const double sign = s % 2 == 0 ? 1.0 : -1.0;
    sum += sign * qfact_or_zero(s + 1, ctx) / den;
  }
  return inner / edges * sum;
}

Complex lambda_twist(int a, int b, int c, const RootParams& ctx, bool conjugate) {
  require_admissible(a, b, c, ctx);
  const int power = (a * (a + 2) + b * (b + 2) - c * (c + 2)) / 2;
  const double sign = ((a + b - c) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(ctx.A, conjugate ? -power : power);
}

Complex fusion_coeff(int a, int b, int i, const RootParams& ctx) {
  return delta(i, ctx) / theta(a, b, i, ctx);
}

Complex recoupling_coeff(int a, int b, int c, int d, int i, int j, const RootParams& ctx) {
  return tet(a, b, i, c, d, j, ctx) * delta(i, ctx) / (theta(a, d, i, ctx) * theta(b, c, i, ctx));
}

Complex crossing_coeff(int a, int b, int i, const RootParams& ctx) {
  return delta(i, ctx) * lambda_twist(a, b, i, ctx) / theta(a, b, i, ctx);
}

Complex bead_removal_coeff(int a, int b, int c, const RootParams& ctx) {
  const Complex dc = delta(c, ctx);
  if (std::abs(dc) < ctx.tolerance) throw DomainError("Delta_c vanishes at this level");
  return theta(a, b, c, ctx) / dc;
}

Complex example_graph_value(int a, int i, int r) {
  const RootParams ctx = RootParams::at_level(r);
  const Complex d = ctx.d;
  if (r == 3) {
    if (a == 0 && i == 0) return 1.0;
    if (a == 1 && i == 0) return d;
    return 0.0;
  }
  if (r == 4) {
    if (a == 0 && i == 0) return 1.0;
    if (a == 1 && i == 0) return d;
    if (a == 2 && i == 0) return d * d;
    if (a == 1 && i == 2) return d;
    return 0.0;
  }
  throw DomainError("graph value tables exist only for r = 3 and r = 4");
}

Complex example_sums(ExampleVariant variant, int r, bool conjugate_lambda) {
  if (r != 3 && r != 4) throw DomainError("example sums are tabulated only for r = 3 and r = 4");
  const RootParams ctx = RootParams::at_level(r);
  Complex total(0.0);
  for (int a = 0; a <= ctx.max_color(); ++a) {
    for (int i = 0; i <= 2 * a; i += 2) {
      if (!admissible(a, a, i, r)) continue;
      const Complex g = example_graph_value(a, i, r);
      if (g == Complex(0.0)) continue;
      const Complex di = delta(i, ctx);
      const Complex lam = lambda_twist(a, a, i, ctx, conjugate_lambda);
      Complex term = di * di * lam * lam * g / theta(a, a, i, ctx);
      if (variant == ExampleVariant::KHat) term *= lambda_twist(a, a, 0, ctx, conjugate_lambda);
      total += term;
    }
  }
  return total;
}

}  // namespace vkt
