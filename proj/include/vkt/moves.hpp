#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vkt/diagram.hpp"

namespace vkt {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, KirbyAdd, KirbyDelete, HandleSlide };

std::string to_string(MoveKind k);

// Arc positions are passage indices: position p of a component is the arc just before its
// p-th passage (position 0 of a crossingless component is the whole circle).
//
// A handle slide of A over B bands A to the second copy of B's 2-cable. The band sits in a
// quadrant of the crossing between A and that copy induced by `crossing`: index / index2
// say whether its feet are before (0) or after (1) the crossing along A and along the copy,
// and flag (copy reversed) is fixed by the quadrant. With crossing = 0 the band is free,
// allowed only when A or B has no classical crossings; index2 is then B's arc position.
struct MoveSite {
  MoveKind kind = MoveKind::R1Add;
  int component = 0;   // R1Add, R2Add (over strand), KirbyDelete, HandleSlide (slid component A)
  int index = 0;
  int component2 = 0;  // R2Add (under strand), HandleSlide (component B slid over)
  int index2 = 0;
  int crossing = 0;    // R1Remove; R2Remove and R3 use all three as needed
  int crossing2 = 0;
  int crossing3 = 0;
  int sign = 1;        // R1Add, R2Add (first crossing), KirbyAdd
  bool flag = false;   // R1Add: underpass first; R2Add: reversed under order; HandleSlide: reversed copy

  std::string to_string() const;
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// Rewritten diagram; ValidationError when the site does not apply.
Diagram apply(const Diagram& d, const MoveSite& site);

std::vector<MoveSite> enumerate_sites(const Diagram& d, MoveKind kind);

// `steps` uniformly chosen applicable moves of the given kinds, reproducible from `seed`.
// Moves whose result would exceed `max_crossings` are not considered. The applied sites are
// appended to `trace` when given.
Diagram random_walk(const Diagram& d, const std::vector<MoveKind>& kinds, int steps, std::uint64_t seed,
                    int max_crossings = 36, std::vector<MoveSite>* trace = nullptr);

// Reidemeister moves that preserve the framing (R2, R3 and their inverses).
std::vector<MoveKind> framed_move_kinds();
std::vector<MoveKind> kirby_move_kinds();

}  // namespace vkt
