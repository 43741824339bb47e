#include "vkt/roots.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "vkt/errors.hpp"

namespace vkt {

RootParams RootParams::at_level(int r, double tolerance) {
  if (r < 2) throw DomainError("level r must be >= 2, got " + std::to_string(r));
  RootParams ctx;
  ctx.r = r;
  ctx.A = std::polar(1.0, std::numbers::pi / (2.0 * r));
  ctx.d = -ctx.A * ctx.A - 1.0 / (ctx.A * ctx.A);
  ctx.tolerance = tolerance;
  return ctx;
}

bool approx_equal(Complex a, Complex b, double tol) {
  return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

LaurentPoly delta_poly(int n) {
  if (n < -1) throw DomainError("Delta_n needs n >= -1");
  if (n == -1) return {};
  // (A^(2n+2) - A^-(2n+2)) / (A^2 - A^-2) is exact in Z[A, A^-1].
  const int k = 2 * n + 2;
  LaurentPoly num = LaurentPoly::monomial(k) - LaurentPoly::monomial(-k);
  LaurentPoly den = LaurentPoly::monomial(2) - LaurentPoly::monomial(-2);
  LaurentPoly q = *num.divide_exact(den);
  return (n % 2 == 0) ? q : -q;
}

Complex delta(int n, const RootParams& ctx) {
  if (n < -1) throw DomainError("Delta_n needs n >= -1");
  if (n == -1) return 0.0;
  // Closed form via sines avoids the 0/0 at A^4 = 1 (r = 2).
  const double theta = std::numbers::pi / ctx.r;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  double value;
  if (std::abs(std::sin(theta)) < 1e-300) {
    value = n + 1.0;
  } else {
    value = std::sin((n + 1) * theta) / std::sin(theta);
  }
  return sign * value;
}

LaurentPoly qint_poly(int n) {
  LaurentPoly dp = delta_poly(n - 1);
  return ((n - 1) % 2 == 0) ? dp : -dp;
}

Complex qint(int n, const RootParams& ctx) {
  Complex dv = delta(n - 1, ctx);
  return ((n - 1) % 2 == 0) ? dv : -dv;
}

Complex qfact(int m, const RootParams& ctx) {
  if (m < 0 || m > ctx.r - 1)
    throw DomainError("quantum factorial [" + std::to_string(m) + "]! outside 0.." + std::to_string(ctx.r - 1));
  Complex out = 1.0;
  for (int k = 2; k <= m; ++k) out *= qint(k, ctx);
  return out;
}

std::string format_complex(Complex z) {
  constexpr double kZero = 5e-7;
  auto part = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  const bool has_re = std::abs(z.real()) >= kZero, has_im = std::abs(z.imag()) >= kZero;
  if (!has_re && !has_im) return "0";
  std::string out = has_re ? part(z.real()) : "";
  if (has_im) {
    std::string im = part(z.imag());
    if (im == "1") im = "";
    else if (im == "-1") im = "-";
    if (has_re && z.imag() > 0) out += "+";
    out += im + "i";
  }
  return out;
}

}  // namespace vkt
