#include <doctest.h>

#include "vkt/groups.hpp"

using namespace vkt;

namespace {

std::string ab(const char* name) { return abelianization(wirtinger(builtin(name))).to_string(); }
std::string ab3(const char* name) { return abelianization(three_manifold_group(builtin(name))).to_string(); }

GroupPresentation presentation(int gens, std::vector<Word> relators) {
  GroupPresentation p;
  for (int g = 0; g < gens; ++g) p.generators.push_back("x" + std::to_string(g + 1));
  p.relators = std::move(relators);
  return p;
}

}  // namespace

TEST_CASE("smith normal form of hand-made presentations") {
  CHECK(abelianization(presentation(0, {})).to_string() == "1");
  CHECK(abelianization(presentation(1, {})).to_string() == "Z");
  CHECK(abelianization(presentation(2, {{{0, 2}}, {{1, 4}}})).to_string() == "Z/2 + Z/4");
  // Z/2 + Z/3 is cyclic of order 6.
  CHECK(abelianization(presentation(2, {{{0, 2}}, {{1, 3}}})).to_string() == "Z/6");
  CHECK(abelianization(presentation(2, {{{0, 4}, {1, 6}}})).to_string() == "Z + Z/2");
  CHECK(abelianization(presentation(3, {{{0, 1}, {1, -1}}})).to_string() == "Z^2");
  // Commutators vanish.
  CHECK(abelianization(presentation(2, {{{0, 1}, {1, 1}, {0, -1}, {1, -1}}})).to_string() == "Z^2");
}

TEST_CASE("knot group abelianizations count components") {
  for (const auto& name : builtin_names()) {
    const Diagram d = builtin(name);
    const AbelianInvariants a = abelianization(wirtinger(d));
    CHECK(a.free_rank == d.component_count());
    CHECK(a.torsion.empty());
  }
  CHECK(ab("vhopf") == "Z^2");
}

TEST_CASE("three-manifold abelianizations give the framing matrix cokernel") {
  CHECK(ab3("unknot") == "Z");
  CHECK(ab3("kink+") == "1");
  CHECK(ab3("kink-") == "1");
  CHECK(ab3("hopf+") == "1");
  CHECK(ab3("hopf-") == "1");
  CHECK(ab3("trefoil") == "Z/3");
  CHECK(ab3("figure8") == "Z");
  CHECK(ab3("paperK") == "Z/2");
  CHECK(ab3("paperKhat") == "1");
  CHECK(ab3("unlink2") == "Z^2");
  CHECK(ab3("framed-pair") == "Z");
}

TEST_CASE("wirtinger presentation shape") {
  const GroupPresentation t = wirtinger(builtin("trefoil"));
  CHECK(t.generators.size() == 3);
  CHECK(t.relators.size() == 3);
  const GroupPresentation u = wirtinger(builtin("unknot"));
  CHECK(u.generators.size() == 1);
  CHECK(u.relators.empty());
  // The trefoil longitude has one letter per underpass.
  CHECK(longitude(builtin("trefoil"), 0).size() == 3);
  CHECK(three_manifold_group(builtin("hopf+")).relators.size() == wirtinger(builtin("hopf+")).relators.size() + 2);
}

TEST_CASE("homomorphisms to symmetric groups") {
  // Abelian images account for 6 maps of any knot group into S_3; 3-colorable knots add 6.
  CHECK(count_homomorphisms_to_symmetric(wirtinger(builtin("unknot")), 3) == 6);
  CHECK(count_homomorphisms_to_symmetric(wirtinger(builtin("trefoil")), 3) == 12);
  CHECK(count_homomorphisms_to_symmetric(wirtinger(builtin("figure8")), 3) == 6);
  CHECK(count_homomorphisms_to_symmetric(wirtinger(builtin("unlink2")), 3) == 36);
  CHECK(count_homomorphisms_to_symmetric(presentation(1, {}), 4) == 24);
  CHECK(count_homomorphisms_to_symmetric(three_manifold_group(builtin("kink+")), 5) == 1);
}
