#pragma once

#include <complex>
#include <string>
#include <vector>

#include "vkt/laurent.hpp"

namespace vkt {

// Exact element of Z[A, A^-1] localized at the quantum integers: numerator / prod_k Delta_k^e_k.
// Every Jones-Wenzl coefficient at generic A has this form, so projector identities can be
// checked with exact equality instead of tolerances.
class DeltaFraction {
 public:
  DeltaFraction() = default;
  DeltaFraction(LaurentPoly numerator);  // NOLINT
  DeltaFraction(LaurentPoly::Coeff c) : DeltaFraction(LaurentPoly(c)) {}  // NOLINT

  // 1 / Delta_k for k >= 1.
  static DeltaFraction inverse_delta(int k);

  const LaurentPoly& numerator() const noexcept { return num_; }
  // Exponent of Delta_k in the denominator (index 0 unused).
  int denominator_exponent(int k) const;
  bool is_zero() const noexcept { return num_.is_zero(); }

  DeltaFraction& operator+=(const DeltaFraction& o);
  DeltaFraction& operator-=(const DeltaFraction& o);
  DeltaFraction& operator*=(const DeltaFraction& o);
  friend DeltaFraction operator+(DeltaFraction a, const DeltaFraction& b) { return a += b; }
  friend DeltaFraction operator-(DeltaFraction a, const DeltaFraction& b) { return a -= b; }
  friend DeltaFraction operator*(DeltaFraction a, const DeltaFraction& b) { return a *= b; }
  friend DeltaFraction operator-(DeltaFraction a);
  friend bool operator==(const DeltaFraction& a, const DeltaFraction& b);

  std::complex<double> evaluate(std::complex<double> A) const;
  std::string to_string() const;

 private:
  void reduce();
  LaurentPoly num_;
  std::vector<int> den_;  // den_[k] = exponent of Delta_k
};

}  // namespace vkt
