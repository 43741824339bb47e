#pragma once

#include <string>
#include <vector>

#include "vkt/diagram.hpp"

namespace vkt {

struct Letter {
  int generator = 0;
  int power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string word_to_string(const Word& w) const;
  // "< x1, x2 | x2^-1 x1^-1 x3 x1, ... >"
  std::string to_string() const;
};

// Generator of every arc (the stretch of a component between consecutive underpasses);
// a component without underpasses is one generator. One relator per classical crossing:
// z = y^-e x y^e for incoming under arc x, outgoing z, over arc y and sign e.
GroupPresentation wirtinger(const Diagram& d);

// Word of over-arc generators met at the underpasses of `component`, in traversal order from
// its first listed passage; each letter has exponent equal to the crossing sign.
Word longitude(const Diagram& d, int component);

// Wirtinger presentation plus one longitude relator per component.
GroupPresentation three_manifold_group(const Diagram& d);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, each dividing the next

  // "1", "Z", "Z/2", "Z^2 + Z/2 + Z/4"
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const GroupPresentation& p);

// Number of homomorphisms into the symmetric group S_n (n <= 5); a finite-quotient count used
// to tell groups with equal abelianizations apart.
long long count_homomorphisms_to_symmetric(const GroupPresentation& p, int n);

}  // namespace vkt
