#include "vkt/tangle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "vkt/bracket.hpp"
#include "vkt/errors.hpp"

namespace vkt {

namespace {

bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
bool is_zero(const DeltaFraction& c) { return c.is_zero(); }

}  // namespace

BrauerDiagram::BrauerDiagram(int n, std::vector<int> matching) : n_(n), match_(std::move(matching)) {
  if (n < 0) throw ValidationError("tangle strand count must be >= 0");
  if (static_cast<int>(match_.size()) != 2 * n) throw ValidationError("matching must cover 2n points");
  for (int p = 0; p < 2 * n; ++p) {
    const int q = match_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= 2 * n || q == p || match_[static_cast<std::size_t>(q)] != p)
      throw ValidationError("matching is not a perfect matching");
  }
}

BrauerDiagram BrauerDiagram::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)] = n + i;
    m[static_cast<std::size_t>(n + i)] = i;
  }
  return BrauerDiagram(n, std::move(m));
}

BrauerDiagram BrauerDiagram::cup_cap(int n, int i) {
  if (i < 1 || i >= n) throw ValidationError("U_i needs 1 <= i < n");
  std::vector<int> m = identity(n).match_;
  const int a = i - 1, b = i;
  m[static_cast<std::size_t>(a)] = b;
  m[static_cast<std::size_t>(b)] = a;
  m[static_cast<std::size_t>(n + a)] = n + b;
  m[static_cast<std::size_t>(n + b)] = n + a;
  return BrauerDiagram(n, std::move(m));
}

BrauerDiagram BrauerDiagram::swap(int n, int i) {
  if (i < 1 || i >= n) throw ValidationError("swap needs 1 <= i < n");
  std::vector<int> m = identity(n).match_;
  const int a = i - 1, b = i;
  m[static_cast<std::size_t>(a)] = n + b;
  m[static_cast<std::size_t>(n + b)] = a;
  m[static_cast<std::size_t>(b)] = n + a;
  m[static_cast<std::size_t>(n + a)] = b;
  return BrauerDiagram(n, std::move(m));
}

bool BrauerDiagram::is_planar() const {
  // Boundary read clockwise: top left to right, then bottom right to left. Planar iff the
  // chords are properly nested in that cyclic order.
  std::vector<int> pos(static_cast<std::size_t>(2 * n_));
  for (int i = 0; i < n_; ++i) {
    pos[static_cast<std::size_t>(i)] = i;
    pos[static_cast<std::size_t>(n_ + i)] = 2 * n_ - 1 - i;
  }
  std::vector<int> stack;
  std::vector<int> at(static_cast<std::size_t>(2 * n_));
  for (int p = 0; p < 2 * n_; ++p) at[static_cast<std::size_t>(pos[static_cast<std::size_t>(p)])] = p;
  for (int k = 0; k < 2 * n_; ++k) {
    const int p = at[static_cast<std::size_t>(k)];
    const int other = pos[static_cast<std::size_t>(mate(p))];
    if (other > k) stack.push_back(other);
    else if (stack.empty() || stack.back() != k) return false;
    else stack.pop_back();
  }
  return true;
}

BrauerDiagram BrauerDiagram::with_extra_strand() const {
  const int m = n_ + 1;
  std::vector<int> out(static_cast<std::size_t>(2 * m));
  auto lift = [&](int p) { return p < n_ ? p : p + 1; };
  for (int p = 0; p < 2 * n_; ++p) out[static_cast<std::size_t>(lift(p))] = lift(mate(p));
  out[static_cast<std::size_t>(n_)] = m + n_;
  out[static_cast<std::size_t>(m + n_)] = n_;
  return BrauerDiagram(m, std::move(out));
}

int BrauerDiagram::closure_loops() const {
  std::vector<bool> seen(static_cast<std::size_t>(2 * n_), false);
  int loops = 0;
  for (int s = 0; s < 2 * n_; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++loops;
    int p = s;
    while (!seen[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = true;
      const int q = mate(p);
      seen[static_cast<std::size_t>(q)] = true;
      p = q < n_ ? q + n_ : q - n_;  // closure arc
    }
  }
  return loops;
}

std::pair<BrauerDiagram, int> compose(const BrauerDiagram& x, const BrauerDiagram& y) {
  const int n = x.n();
  if (y.n() != n) throw ValidationError("cannot compose tangles with different strand counts");
  std::vector<int> out(static_cast<std::size_t>(2 * n), -1);
  std::vector<bool> middle(static_cast<std::size_t>(n), false);
  // Walk from a point of x (in_x) or y until leaving through an outer boundary point.
  auto walk = [&](bool in_x, int point) {
    for (;;) {
      if (in_x) {
        const int q = x.mate(point);
        if (q < n) return q;
        middle[static_cast<std::size_t>(q - n)] = true;
        in_x = false;
        point = q - n;
      } else {
        const int q = y.mate(point);
        if (q >= n) return q;
        middle[static_cast<std::size_t>(q)] = true;
        in_x = true;
        point = q + n;
      }
    }
  };
  for (int p = 0; p < 2 * n; ++p) {
    if (out[static_cast<std::size_t>(p)] >= 0) continue;
    const int q = walk(p < n, p);
    out[static_cast<std::size_t>(p)] = q;
    out[static_cast<std::size_t>(q)] = p;
  }
  int loops = 0;
  for (int i = 0; i < n; ++i) {
    if (middle[static_cast<std::size_t>(i)]) continue;
    ++loops;
    int point = i;  // middle point i seen from y's top
    while (!middle[static_cast<std::size_t>(point)]) {
      middle[static_cast<std::size_t>(point)] = true;
      const int q = y.mate(point);  // stays in the middle: a closed loop never exits
      middle[static_cast<std::size_t>(q)] = true;
      point = x.mate(q + n) - n;
    }
  }
  return {BrauerDiagram(n, std::move(out)), loops};
}

template <class C>
BrauerElement<C>::BrauerElement(const BrauerDiagram& b, C coeff) : n_(b.n()) {
  add(b, coeff);
}

template <class C>
C BrauerElement<C>::coeff(const BrauerDiagram& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? C{} : it->second;
}

template <class C>
void BrauerElement<C>::add(const BrauerDiagram& b, const C& coeff) {
  if (b.n() != n_) throw ValidationError("tangle strand counts differ");
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    if (!is_zero(coeff)) terms_.emplace(b, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (is_zero(it->second)) terms_.erase(it);
}

template <class C>
BrauerElement<C>& BrauerElement<C>::operator+=(const BrauerElement& o) {
  if (o.n_ != n_) throw ValidationError("tangle strand counts differ");
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

template <class C>
BrauerElement<C>& BrauerElement<C>::operator-=(const BrauerElement& o) {
  if (o.n_ != n_) throw ValidationError("tangle strand counts differ");
  for (const auto& [b, c] : o.terms_) add(b, C{} - c);
  return *this;
}

template <class C>
BrauerElement<C> BrauerElement<C>::scaled(const C& s) const {
  BrauerElement out(n_);
  for (const auto& [b, c] : terms_) out.add(b, c * s);
  return out;
}

template <class C>
BrauerElement<C> BrauerElement<C>::with_extra_strand() const {
  BrauerElement out(n_ + 1);
  for (const auto& [b, c] : terms_) out.add(b.with_extra_strand(), c);
  return out;
}

template <class C>
BrauerElement<C> multiply(const BrauerElement<C>& x, const BrauerElement<C>& y, const C& d) {
  if (x.n() != y.n()) throw ValidationError("cannot multiply tangles with different strand counts");
  BrauerElement<C> out(x.n());
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      auto [b, loops] = compose(bx, by);
      C c = cx * cy;
      for (int i = 0; i < loops; ++i) c = c * d;
      out.add(b, c);
    }
  }
  return out;
}

template <class C>
C closure(const BrauerElement<C>& x, const C& d) {
  C total{};
  for (const auto& [b, c] : x.terms()) {
    C term = c;
    for (int i = b.closure_loops(); i > 0; --i) term = term * d;
    total = total + term;
  }
  return total;
}

template class BrauerElement<Complex>;
template class BrauerElement<DeltaFraction>;
template BrauerElement<Complex> multiply(const BrauerElement<Complex>&, const BrauerElement<Complex>&,
                                         const Complex&);
template BrauerElement<DeltaFraction> multiply(const BrauerElement<DeltaFraction>&,
                                               const BrauerElement<DeltaFraction>&, const DeltaFraction&);
template Complex closure(const BrauerElement<Complex>&, const Complex&);
template DeltaFraction closure(const BrauerElement<DeltaFraction>&, const DeltaFraction&);

bool approx_equal(const BrauerElement<Complex>& x, const BrauerElement<Complex>& y, double tol) {
  if (x.n() != y.n()) return false;
  BrauerElement<Complex> diff = x - y;
  return std::all_of(diff.terms().begin(), diff.terms().end(),
                     [&](const auto& t) { return std::abs(t.second.real()) <= tol && std::abs(t.second.imag()) <= tol; });
}

namespace {

// T_n = T' - (Delta_{n-2}/Delta_{n-1}) T' U_{n-1} T' with T' = T_{n-1} (x) 1.
template <class C>
BrauerElement<C> wenzl_step(const BrauerElement<C>& prev, const C& ratio, const C& d) {
  const int n = prev.n() + 1;
  BrauerElement<C> t = prev.with_extra_strand();
  if (n < 2) return t;
  BrauerElement<C> u(BrauerDiagram::cup_cap(n, n - 1), C(1));
  return t - multiply(multiply(t, u, d), t, d).scaled(ratio);
}

}  // namespace

BrauerElement<Complex> jw(int n, const RootParams& ctx) {
  if (n < 0) throw DomainError("projector index must be >= 0");
  if (n > ctx.r - 1) throw DomainError("projector T_" + std::to_string(n) + " undefined at level r=" + std::to_string(ctx.r));
  static std::mutex mu;
  static std::map<int, std::vector<BrauerElement<Complex>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& chain = cache[ctx.r];
  if (chain.empty()) chain.emplace_back(BrauerDiagram::identity(0), Complex(1.0));
  while (static_cast<int>(chain.size()) <= n) {
    const int k = static_cast<int>(chain.size());
    const Complex ratio = k >= 2 ? delta(k - 2, ctx) / delta(k - 1, ctx) : Complex(0.0);
    chain.push_back(wenzl_step(chain.back(), ratio, ctx.d));
  }
  return chain[static_cast<std::size_t>(n)];
}

BrauerElement<DeltaFraction> jw_generic(int n) {
  if (n < 0) throw DomainError("projector index must be >= 0");
  static std::mutex mu;
  static std::vector<BrauerElement<DeltaFraction>> chain;
  std::lock_guard<std::mutex> lock(mu);
  if (chain.empty()) chain.emplace_back(BrauerDiagram::identity(0), DeltaFraction(1));
  const DeltaFraction d(LaurentPoly::loop());
  while (static_cast<int>(chain.size()) <= n) {
    const int k = static_cast<int>(chain.size());
    DeltaFraction ratio;
    if (k >= 2) ratio = DeltaFraction(delta_poly(k - 2)) * DeltaFraction::inverse_delta(k - 1);
    chain.push_back(wenzl_step(chain.back(), ratio, d));
  }
  return chain[static_cast<std::size_t>(n)];
}

BrauerDiagram virtual_swap(int n, int i) { return BrauerDiagram::swap(n, i); }

Complex lemma_product(int n, const RootParams& ctx) {
  if (n < 2) throw DomainError("lemma product needs n >= 2");
  BrauerElement<Complex> e(virtual_swap(n, 1), Complex(1.0));
  return closure(multiply(jw(n, ctx), e, ctx.d), ctx.d) / ctx.d;
}

DeltaFraction lemma_product_generic(int n) {
  if (n < 2) throw DomainError("lemma product needs n >= 2");
  const DeltaFraction d(LaurentPoly::loop());
  BrauerElement<DeltaFraction> e(virtual_swap(n, 1), DeltaFraction(1));
  return closure(multiply(jw_generic(n), e, d), d) * DeltaFraction::inverse_delta(1);
}

}  // namespace vkt
