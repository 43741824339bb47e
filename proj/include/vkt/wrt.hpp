#pragma once

#include <vector>

#include "vkt/conventions.hpp"
#include "vkt/diagram.hpp"
#include "vkt/roots.hpp"

namespace vkt {

struct Signature {
  int b_plus = 0;
  int b_minus = 0;
  int n_sig = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact signature of a symmetric integer matrix by rational congruence diagonalization.
Signature signature(const LinkingMatrix& n);

// Signature of the linking matrix of `d`. Virtual links may have half-integer linking
// numbers, so the doubled matrix (same signature) is diagonalized instead.
Signature framing_signature(const Diagram& d);

// mu = sqrt(2/r) sin(pi/r); alpha = (-i)^(r-2) exp(i pi 3(r-2)/(4r)).
Complex wrt_mu(int r);
Complex wrt_alpha(int r);

// <K^w> = sum over colorings a in {0..r-2}^n of prod Delta_{a_i} <K^a>.
Complex unnormalized_wrt(const Diagram& d, int r, const ConventionSet& conv = selected_conventions());

struct WrtResult {
  int r = 0;
  Complex unnormalized;
  int b_plus = 0;
  int b_minus = 0;
  int n_sig = 0;
  Complex mu;
  Complex alpha;
  Complex normalized;  // unnormalized * mu^(|K|+1) * alpha^(-n_sig)
};

WrtResult normalized_wrt(const Diagram& d, int r, const ConventionSet& conv = selected_conventions());

}  // namespace vkt
