#pragma once

// Independent reference computations used by the tests. They share nothing with the library
// beyond the Diagram type and LaurentPoly arithmetic.

#include <complex>
#include <map>
#include <numeric>
#include <vector>

#include "vkt/diagram.hpp"
#include "vkt/laurent.hpp"

namespace oracle {

// Bracket by enumerating all 2^c states. Every crossing has four corners
// (over in/out, under in/out); the A-smoothing joins the corners that the sign-dependent
// picture puts in the A regions.
inline vkt::LaurentPoly bracket(const vkt::Diagram& d, bool reduced) {
  const auto ids = d.crossing_ids();
  const int c = static_cast<int>(ids.size());
  std::map<int, int> index;
  for (int i = 0; i < c; ++i) index[ids[static_cast<std::size_t>(i)]] = i;

  // Strand segments: segment between consecutive passages joins "out" corner of one
  // passage with "in" corner of the next.
  std::vector<std::pair<int, int>> segments;
  int crossingless = 0;
  for (const auto& comp : d.components()) {
    if (comp.empty()) {
      ++crossingless;
      continue;
    }
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const auto& a = comp[k];
      const auto& b = comp[(k + 1) % comp.size()];
      const int out = 4 * index[a.id] + (a.role == vkt::Role::Over ? 1 : 3);
      const int in = 4 * index[b.id] + (b.role == vkt::Role::Over ? 0 : 2);
      segments.emplace_back(out, in);
    }
  }

  vkt::LaurentPoly total;
  const vkt::LaurentPoly loop = -vkt::LaurentPoly::monomial(2) - vkt::LaurentPoly::monomial(-2);
  for (long long state = 0; state < (1LL << c); ++state) {
    std::vector<int> parent(static_cast<std::size_t>(4 * c));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    auto join = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
    for (auto [x, y] : segments) join(x, y);
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const bool a_smoothing = ((state >> i) & 1) == 0;
      const bool positive = d.sign(ids[static_cast<std::size_t>(i)]) > 0;
      // Positive crossing: A joins over-in with under-out and under-in with over-out.
      // Negative crossing: A joins over-in with under-in and over-out with under-out.
      const bool oriented_pairing = a_smoothing == positive;
      const int base = 4 * i;
      if (oriented_pairing) {
        join(base + 0, base + 3);
        join(base + 2, base + 1);
      } else {
        join(base + 0, base + 2);
        join(base + 1, base + 3);
      }
      a_count += a_smoothing ? 1 : 0;
    }
    int loops = crossingless;
    for (int h = 0; h < 4 * c; ++h)
      if (find(h) == h) ++loops;
    vkt::LaurentPoly term = vkt::LaurentPoly::monomial(a_count - (c - a_count));
    const int power = reduced ? loops - 1 : loops;
    if (power < 0) {
      term = vkt::LaurentPoly(1);  // empty diagram, reduced by convention to 1
    } else {
      term *= loop.pow(static_cast<unsigned>(power));
    }
    total += term;
  }
  return total;
}

// Linking number counted straight from the Gauss code: half the signed crossings that
// involve both components.
inline double linking(const vkt::Diagram& d, int i, int j) {
  int twice = 0;
  for (int id : d.crossing_ids()) {
    const int a = d.over(id).component, b = d.under(id).component;
    if ((a == i && b == j) || (a == j && b == i)) twice += d.sign(id);
  }
  return twice / 2.0;
}

// At r = 3 only the colors 0 and 1 occur and T_1 is the identity, so the color sum reduces
// to a sum over sublinks S of d^|S| <S>_unreduced, evaluated here with the oracle bracket at
// A = exp(i pi / 6).
inline std::complex<double> unnormalized_wrt_r3(const vkt::Diagram& d) {
  const std::complex<double> A = std::polar(1.0, M_PI / 6.0);
  const std::complex<double> loop = -A * A - 1.0 / (A * A);
  const int k = d.component_count();
  std::complex<double> sum = 0;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> keep(static_cast<std::size_t>(k));
    int size = 0;
    for (int i = 0; i < k; ++i) size += keep[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    const vkt::Diagram sub = vkt::cable(d, keep);
    std::complex<double> b = 1.0;
    if (!sub.empty()) {
      b = 0;
      for (const auto& [e, coeff] : bracket(sub, false).terms()) b += static_cast<double>(coeff) * std::pow(A, e);
    }
    sum += std::pow(loop, size) * b;
  }
  return sum;
}

}  // namespace oracle
