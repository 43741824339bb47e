#pragma once

#include <string>
#include <vector>

namespace vkt {

// Sign choices left ambiguous by the source conventions, pinned by calibration.
struct ConventionSet {
  bool mirror_bracket = false;    // evaluate the state sums with A -> A^-1
  bool conjugate_lambda = false;  // example sums use conj(lambda) instead of lambda
  int alpha_exponent = -1;        // Z carries alpha^(alpha_exponent * n_sig)

  std::string describe() const;
  friend bool operator==(const ConventionSet&, const ConventionSet&) = default;
};

// The convention set recorded in conventions/ledger.json.
ConventionSet selected_conventions();

struct CandidateReport {
  ConventionSet conventions;
  bool anchors_hold = false;       // Z(unknot) = 1 and alpha = mu <U^w> for the +1-framed unknot
  int phase_matches = 0;           // printed values reproduced to 1e-4
  int modulus_matches = 0;         // printed moduli reproduced to 1e-4
  int table_matches = 0;           // printed <K^w> values reproduced by the tabulated sums
  int printed_ratio_matches = 0;   // printed Z / printed <K^w> consistent with mu^2 alpha^(e n)
};

struct Discrepancy {
  std::string quantity;
  double printed_re = 0, printed_im = 0;
  double computed_re = 0, computed_im = 0;
  bool phase_match = false;
  bool modulus_match = false;
};

struct ConventionLedger {
  ConventionSet selected;
  std::vector<CandidateReport> candidates;
  std::vector<std::string> ties;
  std::vector<Discrepancy> discrepancies;  // under the selected set

  // Deterministic JSON (numbers rounded to 6 decimals).
  std::string to_json() const;
};

// Scores all 8 convention combinations against the anchors and the printed example values.
ConventionLedger calibrate_conventions();

}  // namespace vkt
