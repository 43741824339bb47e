#include "vkt/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vkt {

LaurentPoly::LaurentPoly(Coeff constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::loop() { return monomial(2, -1) + monomial(-2, -1); }

void LaurentPoly::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (auto [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (auto [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(Coeff scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

LaurentPoly LaurentPoly::mirrored() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.add_term(e * k, c);
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};
  // Shift both to ordinary polynomials with nonzero constant terms; the divisor is then
  // coprime to A, so Laurent divisibility equals polynomial divisibility.
  const int shift = min_degree() - divisor.min_degree();
  const int dlow = divisor.min_degree();
  const int dhigh = divisor.max_degree() - dlow;
  std::vector<Coeff> den(static_cast<std::size_t>(dhigh) + 1, 0);
  for (auto [e, c] : divisor.terms_) den[static_cast<std::size_t>(e - dlow)] = c;
  const int nlow = min_degree();
  const int nhigh = max_degree() - nlow;
  if (nhigh < dhigh) return std::nullopt;
  std::vector<Coeff> rem(static_cast<std::size_t>(nhigh) + 1, 0);
  for (auto [e, c] : terms_) rem[static_cast<std::size_t>(e - nlow)] = c;

  const Coeff lead = den.back();
  LaurentPoly quotient;
  for (int k = nhigh - dhigh; k >= 0; --k) {
    Coeff top = rem[static_cast<std::size_t>(k + dhigh)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Coeff q = top / lead;
    quotient.add_term(k + shift, q);
    for (int j = 0; j <= dhigh; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den[static_cast<std::size_t>(j)];
  }
  for (Coeff c : rem)
    if (c != 0) return std::nullopt;
  return quotient;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> a) const {
  std::complex<double> sum = 0.0;
  for (auto [e, c] : terms_) sum += static_cast<double>(c) * std::pow(a, e);
  return sum;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace vkt
