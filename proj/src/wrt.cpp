#include "vkt/wrt.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "vkt/bracket.hpp"
#include "vkt/errors.hpp"
#include "vkt/tangle.hpp"

namespace vkt {

using boost::multiprecision::cpp_rational;

Signature signature(const LinkingMatrix& n) {
  const std::size_t size = n.size();
  std::vector<std::vector<cpp_rational>> m(size, std::vector<cpp_rational>(size));
  for (std::size_t i = 0; i < size; ++i) {
    if (n[i].size() != size) throw ValidationError("linking matrix must be square");
    for (std::size_t j = 0; j < size; ++j) {
      if (n[i][j] != n[j][i]) throw ValidationError("linking matrix must be symmetric");
      m[i][j] = n[i][j];
    }
  }
  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  Signature s;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = size;
    for (std::size_t p = k; p < size; ++p)
      if (m[p][p] != 0) { pivot = p; break; }
    if (pivot == size) {
      // Zero diagonal: adding row/column j to i makes m[i][i] = 2 m[i][j].
      std::size_t pi = size, pj = size;
      for (std::size_t i = k; i < size && pi == size; ++i)
        for (std::size_t j = k; j < size; ++j)
          if (i != j && m[i][j] != 0) { pi = i; pj = j; break; }
      if (pi == size) break;  // remaining block is zero
      for (std::size_t c = 0; c < size; ++c) m[pi][c] += m[pj][c];
      for (std::size_t r = 0; r < size; ++r) m[r][pi] += m[r][pj];
      pivot = pi;
    }
    swap_index(k, pivot);
    for (std::size_t i = k + 1; i < size; ++i) {
      if (m[i][k] == 0) continue;
      const cpp_rational f = m[i][k] / m[k][k];
      for (std::size_t c = k; c < size; ++c) m[i][c] -= f * m[k][c];
      for (std::size_t r = k; r < size; ++r) m[r][i] -= f * m[r][k];
    }
    if (m[k][k] > 0) ++s.b_plus;
    else ++s.b_minus;
  }
  s.n_sig = s.b_plus - s.b_minus;
  return s;
}

Signature framing_signature(const Diagram& d) {
  const int c = d.component_count();
  LinkingMatrix twice(static_cast<std::size_t>(c), std::vector<int>(static_cast<std::size_t>(c), 0));
  for (int i = 0; i < c; ++i) {
    twice[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2 * self_writhe(d, i);
    for (int j = i + 1; j < c; ++j) {
      const int lk = linking_number(d, i, j).twice;
      twice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lk;
      twice[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = lk;
    }
  }
  return signature(twice);
}

Complex wrt_mu(int r) {
  if (r < 3) throw DomainError("WRT needs r >= 3");
  return std::sqrt(2.0 / r) * std::sin(std::numbers::pi / r);
}

Complex wrt_alpha(int r) {
  if (r < 3) throw DomainError("WRT needs r >= 3");
  const Complex minus_i(0.0, -1.0);
  return std::pow(minus_i, r - 2) * std::exp(Complex(0.0, std::numbers::pi * 3.0 * (r - 2) / (4.0 * r)));
}

Complex unnormalized_wrt(const Diagram& d, int r, const ConventionSet& conv) {
  if (r < 3) throw DomainError("WRT needs r >= 3");
  const RootParams ctx = RootParams::at_level(r);
  const int n = d.component_count();
  const int colors = r - 1;
  check_budget(cable(d, r - 2).crossing_count());

  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(colors);

  // Terms are written to fixed slots and summed in index order, so the result does not
  // depend on scheduling.
  std::vector<Complex> terms(total);
  auto work = [&](std::size_t begin, std::size_t step, std::exception_ptr& err) {
    try {
      for (std::size_t idx = begin; idx < total; idx += step) {
        std::vector<int> a(static_cast<std::size_t>(n));
        std::size_t rest = idx;
        Complex weight(1.0);
        for (int i = 0; i < n; ++i) {
          a[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(colors));
          rest /= static_cast<std::size_t>(colors);
          weight *= delta(a[static_cast<std::size_t>(i)], ctx);
        }
        terms[idx] = weight * splice_and_evaluate(d, a, ctx);
      }
    } catch (...) {
      err = std::current_exception();
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(total, std::max(1U, std::min(8U, std::thread::hardware_concurrency())));
  std::vector<std::exception_ptr> errors(workers);
  if (workers <= 1) {
    work(0, 1, errors[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers, std::ref(errors[w]));
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Complex sum(0.0);
  for (const Complex& t : terms) sum += t;
  // Integer coefficients and |A| = 1: A -> A^-1 is complex conjugation.
  return conv.mirror_bracket ? std::conj(sum) : sum;
}

WrtResult normalized_wrt(const Diagram& d, int r, const ConventionSet& conv) {
  WrtResult out;
  out.r = r;
  out.unnormalized = unnormalized_wrt(d, r, conv);
  const Signature s = framing_signature(d);
  out.b_plus = s.b_plus;
  out.b_minus = s.b_minus;
  out.n_sig = s.n_sig;
  out.mu = wrt_mu(r);
  out.alpha = wrt_alpha(r);
  out.normalized =
      out.unnormalized * std::pow(out.mu, d.component_count() + 1) * std::pow(out.alpha, conv.alpha_exponent * s.n_sig);
  return out;
}

}  // namespace vkt
