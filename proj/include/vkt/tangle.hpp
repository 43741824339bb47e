#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "vkt/delta_fraction.hpp"
#include "vkt/diagram.hpp"
#include "vkt/roots.hpp"

namespace vkt {

// Perfect matching on 2n boundary points of an n-tangle: 0..n-1 along the top (left to
// right), n..2n-1 along the bottom. Crossing chords are virtual crossings.
class BrauerDiagram {
 public:
  BrauerDiagram(int n, std::vector<int> matching);

  static BrauerDiagram identity(int n);
  // U_i (1 <= i < n): cap joining top i, i+1 and cup joining bottom i, i+1 (1-based strands).
  static BrauerDiagram cup_cap(int n, int i);
  // Virtual crossing of strands i and i+1 (1-based).
  static BrauerDiagram swap(int n, int i);

  int n() const noexcept { return n_; }
  const std::vector<int>& matching() const noexcept { return match_; }
  int mate(int point) const { return match_.at(static_cast<std::size_t>(point)); }
  bool is_planar() const;

  // Adds an identity strand on the right.
  BrauerDiagram with_extra_strand() const;
  // Loops formed when top i is joined to bottom i.
  int closure_loops() const;

  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<int> match_;
};

// x stacked on top of y; the second member is the number of closed loops erased.
std::pair<BrauerDiagram, int> compose(const BrauerDiagram& x, const BrauerDiagram& y);

// Formal sum of Brauer diagrams with coefficients in Complex or DeltaFraction.
template <class C>
class BrauerElement {
 public:
  explicit BrauerElement(int n) : n_(n) {}
  BrauerElement(const BrauerDiagram& b, C coeff);

  int n() const noexcept { return n_; }
  const std::map<BrauerDiagram, C>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  C coeff(const BrauerDiagram& b) const;

  void add(const BrauerDiagram& b, const C& coeff);
  BrauerElement& operator+=(const BrauerElement& o);
  BrauerElement& operator-=(const BrauerElement& o);
  BrauerElement scaled(const C& s) const;
  BrauerElement with_extra_strand() const;

 private:
  int n_;
  std::map<BrauerDiagram, C> terms_;
};

template <class C>
BrauerElement<C> operator+(BrauerElement<C> a, const BrauerElement<C>& b) { return a += b; }
template <class C>
BrauerElement<C> operator-(BrauerElement<C> a, const BrauerElement<C>& b) { return a -= b; }

// Bilinear stacking; each erased loop contributes a factor d.
template <class C>
BrauerElement<C> multiply(const BrauerElement<C>& x, const BrauerElement<C>& y, const C& d);

// Unreduced closure: sum of coeff * d^loops.
template <class C>
C closure(const BrauerElement<C>& x, const C& d);

// Differences below `tol` in every coefficient (exact comparison for DeltaFraction).
bool approx_equal(const BrauerElement<Complex>& x, const BrauerElement<Complex>& y, double tol);

// Jones-Wenzl projector at A = exp(i pi / 2r); needs n <= r-1. Results are cached.
BrauerElement<Complex> jw(int n, const RootParams& ctx);
// Same recursion at generic A with exact coefficients.
BrauerElement<DeltaFraction> jw_generic(int n);

BrauerDiagram virtual_swap(int n, int i);

// d^-1 * closure(T_n E_12), E_12 the virtual swap of the first two strands.
Complex lemma_product(int n, const RootParams& ctx);
DeltaFraction lemma_product_generic(int n);

// Colored bracket <K^a>: cable component i by a_i strands, cut every cable at the start of
// its component's first arc, splice in the planar matchings of T_{a_i} and sum the
// weighted unreduced brackets. Color 0 deletes the component.
Complex splice_and_evaluate(const Diagram& d, const std::vector<int>& colors, const RootParams& ctx);
DeltaFraction splice_and_evaluate_generic(const Diagram& d, const std::vector<int>& colors);

}  // namespace vkt
