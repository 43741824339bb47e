#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace vkt {

// Integer Laurent polynomial in the bracket variable A. Zero coefficients are
// never stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT: integers embed as constants

  static LaurentPoly monomial(int exponent, Coeff coeff = 1);
  static LaurentPoly A() { return monomial(1); }
  static LaurentPoly A_inv() { return monomial(-1); }
  // Loop value d = -A^2 - A^-2.
  static LaurentPoly loop();

  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(Coeff scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a) { return a *= -1; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned k) const;
  // Multiplies by A^shift.
  LaurentPoly shifted(int shift) const;
  // A -> A^-1.
  LaurentPoly mirrored() const;
  // A -> A^k (k may be negative), used for the t^(1/4) substitution.
  LaurentPoly substitute_power(int k) const;

  // Exact quotient when `divisor` divides *this over Z[A, A^-1]; otherwise nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  std::complex<double> evaluate(std::complex<double> a) const;

  // Human-readable form such as "-A^4 - A^-4"; `var` names the variable.
  std::string to_string(const std::string& var = "A") const;

 private:
  void add_term(int exponent, Coeff coeff);
  std::map<int, Coeff> terms_;
};

}  // namespace vkt
