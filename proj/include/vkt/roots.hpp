#pragma once

#include <complex>
#include <string>

#include "vkt/laurent.hpp"

namespace vkt {

using Complex = std::complex<double>;

// Evaluation context at the primitive root A = exp(i*pi/(2r)).
struct RootParams {
  int r = 3;
  Complex A;
  Complex d;  // -A^2 - A^-2
  double tolerance = 1e-9;

  static RootParams at_level(int r, double tolerance = 1e-9);

  // Largest usable color: r - 2.
  int max_color() const noexcept { return r - 2; }
};

bool approx_equal(Complex a, Complex b, double tol);

// "a+bi" with 6 significant digits per part; parts below 5e-7 are dropped ("0" when both are),
// so 0.707107i and -0.517982+0.135299i print as such.
std::string format_complex(Complex z);

// Delta_n = (-1)^n (A^(2n+2) - A^-(2n+2)) / (A^2 - A^-2); Delta_-1 = 0.
LaurentPoly delta_poly(int n);
Complex delta(int n, const RootParams& ctx);

// Quantum integer [n] = (-1)^(n-1) Delta_(n-1).
LaurentPoly qint_poly(int n);
Complex qint(int n, const RootParams& ctx);

// [m]! for 0 <= m <= r-1; anything else raises DomainError.
Complex qfact(int m, const RootParams& ctx);

}  // namespace vkt
