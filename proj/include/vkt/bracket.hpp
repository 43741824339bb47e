#pragma once

#include <string>
#include <vector>

#include "vkt/diagram.hpp"
#include "vkt/laurent.hpp"
#include "vkt/roots.hpp"

namespace vkt {

// Alpha carries weight A, Beta carries A^-1. For a positive crossing Alpha is the oriented
// (Seifert) smoothing, for a negative crossing it is the unoriented one; this makes the
// +1 kink "O1+U1+" evaluate to -A^3.
enum class Smoothing : unsigned char { Alpha, Beta };

// Four-valent graph of classical crossings plus auxiliary terminals, the common input of
// every bracket evaluation. Half-edge 4c+k of crossing c is over-in, over-out, under-in,
// under-out for k = 0..3. Terminals (negative node ids) are degree-two pass-through points
// where projector matchings are spliced in.
class StateNetwork {
 public:
  static constexpr int kOverIn = 0, kOverOut = 1, kUnderIn = 2, kUnderOut = 3;

  int add_crossing(int sign);
  int add_terminal();
  static int half_edge(int crossing, int which) { return 4 * crossing + which; }
  void connect(int a, int b);
  void add_free_loop() { ++explicit_loops_; }

  int crossing_count() const noexcept { return static_cast<int>(signs_.size()); }
  int sign(int c) const { return signs_.at(static_cast<std::size_t>(c)); }

  // Follows terminals to pair each half-edge with the half-edge at the other end of its
  // arc; closed terminal cycles become free loops. Call once after all connections.
  void resolve();
  const std::vector<int>& partner() const { return partner_; }
  int free_loops() const noexcept { return free_loops_; }

 private:
  std::vector<int> signs_;
  int terminals_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> partner_;
  int explicit_loops_ = 0;
  int free_loops_ = 0;
  bool resolved_ = false;
};

// Terminal ids where a cut component's strand arrives at / departs from its marked point.
struct CutTerminals {
  int arrive = 0;
  int depart = 0;
};

// Network of `d`. Components with cut[i] set are opened at the start of their first arc
// (just before the first listed passage) and the two resulting terminals are returned in
// `terminals` (same indexing as components; unset entries are untouched). A network with
// cuts is left unresolved until its terminals have been wired.
StateNetwork network_from_diagram(const Diagram& d, const std::vector<bool>& cut = {},
                                  std::vector<CutTerminals>* terminals = nullptr);

template <class V>
struct BracketWeights {
  V one, a, a_inv, d;
};

// Sum over states of A^c(s) d^(loops(s)) (unreduced) or d^(loops(s)-1) (reduced), by
// contracting crossings one at a time while tracking the pairing of open arc ends.
template <class V>
V state_sum(StateNetwork net, const BracketWeights<V>& w, bool reduced);

// Oracle: plain 2^c enumeration with union-find loop counting.
LaurentPoly state_sum_by_enumeration(StateNetwork net, bool reduced);

// Maximum crossings accepted by evaluations; default 36, override with VKT_CROSSING_BUDGET.
int crossing_budget();
void check_budget(int crossings);

// Loop count of the smoothing given per crossing, crossings taken in increasing id order.
int loops(const Diagram& d, const std::vector<Smoothing>& state);

LaurentPoly bracket_reduced(const Diagram& d);
LaurentPoly bracket_unreduced(const Diagram& d);
Complex bracket_reduced(const Diagram& d, const RootParams& ctx);
Complex bracket_unreduced(const Diagram& d, const RootParams& ctx);

// f_K = (-A)^(-3 w) <K>.
LaurentPoly f_poly(const Diagram& d);

// Jones polynomial via A = t^(-1/4); stored as a Laurent polynomial in u = t^(1/4).
struct JonesPoly {
  LaurentPoly in_quarter_t;
  std::string to_string() const;
  friend bool operator==(const JonesPoly&, const JonesPoly&) = default;
};
JonesPoly jones(const Diagram& d);

BracketWeights<LaurentPoly> generic_weights();
BracketWeights<Complex> complex_weights(const RootParams& ctx);

}  // namespace vkt
