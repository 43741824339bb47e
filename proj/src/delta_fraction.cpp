#include "vkt/delta_fraction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vkt/roots.hpp"

namespace vkt {

namespace {

// Multiplies `p` by Delta_k^times.
LaurentPoly times_delta(LaurentPoly p, int k, int times) {
  const LaurentPoly dk = delta_poly(k);
  for (int i = 0; i < times; ++i) p *= dk;
  return p;
}

}  // namespace

DeltaFraction::DeltaFraction(LaurentPoly numerator) : num_(std::move(numerator)) {}

DeltaFraction DeltaFraction::inverse_delta(int k) {
  if (k < 1) throw std::domain_error("inverse_delta needs k >= 1");
  DeltaFraction f(LaurentPoly(1));
  f.den_.assign(static_cast<std::size_t>(k) + 1, 0);
  f.den_[static_cast<std::size_t>(k)] = 1;
  return f;
}

int DeltaFraction::denominator_exponent(int k) const {
  return k < static_cast<int>(den_.size()) ? den_[static_cast<std::size_t>(k)] : 0;
}

void DeltaFraction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (std::size_t k = 1; k < den_.size(); ++k) {
    while (den_[k] > 0) {
      auto q = num_.divide_exact(delta_poly(static_cast<int>(k)));
      if (!q) break;
      num_ = std::move(*q);
      --den_[k];
    }
  }
  while (!den_.empty() && den_.back() == 0) den_.pop_back();
}

DeltaFraction& DeltaFraction::operator+=(const DeltaFraction& o) {
  const std::size_t n = std::max(den_.size(), o.den_.size());
  std::vector<int> common(n, 0);
  LaurentPoly a = num_, b = o.num_;
  for (std::size_t k = 1; k < n; ++k) {
    int ea = denominator_exponent(static_cast<int>(k));
    int eb = o.denominator_exponent(static_cast<int>(k));
    common[k] = std::max(ea, eb);
    a = times_delta(std::move(a), static_cast<int>(k), common[k] - ea);
    b = times_delta(std::move(b), static_cast<int>(k), common[k] - eb);
  }
  num_ = a + b;
  den_ = std::move(common);
  reduce();
  return *this;
}

DeltaFraction& DeltaFraction::operator-=(const DeltaFraction& o) { return *this += -o; }

DeltaFraction& DeltaFraction::operator*=(const DeltaFraction& o) {
  num_ *= o.num_;
  const std::size_t n = std::max(den_.size(), o.den_.size());
  den_.resize(n, 0);
  for (std::size_t k = 1; k < o.den_.size(); ++k) den_[k] += o.den_[k];
  reduce();
  return *this;
}

DeltaFraction operator-(DeltaFraction a) {
  a.num_ *= -1;
  return a;
}

bool operator==(const DeltaFraction& a, const DeltaFraction& b) { return (a - b).is_zero(); }

std::complex<double> DeltaFraction::evaluate(std::complex<double> A) const {
  std::complex<double> value = num_.evaluate(A);
  for (std::size_t k = 1; k < den_.size(); ++k)
    for (int e = 0; e < den_[k]; ++e) value /= delta_poly(static_cast<int>(k)).evaluate(A);
  return value;
}

std::string DeltaFraction::to_string() const {
  std::ostringstream os;
  os << '(' << num_.to_string() << ')';
  for (std::size_t k = 1; k < den_.size(); ++k)
    if (den_[k] > 0) os << " / Delta_" << k << (den_[k] > 1 ? "^" + std::to_string(den_[k]) : "");
  return os.str();
}

}  // namespace vkt
