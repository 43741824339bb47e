#include <doctest.h>

#include "vkt/bracket.hpp"
#include "vkt/errors.hpp"
#include "vkt/groups.hpp"
#include "vkt/moves.hpp"
#include "vkt/wrt.hpp"

using namespace vkt;

namespace {

bool near(Complex a, Complex b, double tol = 1e-8) { return std::abs(a - b) <= tol; }

const std::vector<std::string> kSmall = {"unknot", "kink+", "hopf+", "trefoil", "vtrefoil", "vhopf", "paperK", "framed-pair"};

}  // namespace

TEST_CASE("R1 multiplies the bracket by -A^(+-3)") {
  for (const auto& name : kSmall) {
    const Diagram d = builtin(name);
    for (const MoveSite& s : enumerate_sites(d, MoveKind::R1Add)) {
      const Diagram e = apply(d, s);
      CHECK(e.crossing_count() == d.crossing_count() + 1);
      CHECK(bracket_reduced(e) == bracket_reduced(d) * -LaurentPoly::monomial(3 * s.sign));
      CHECK(f_poly(e) == f_poly(d));
    }
    for (const MoveSite& s : enumerate_sites(d, MoveKind::R1Remove)) {
      const Diagram e = apply(d, s);
      CHECK(f_poly(e) == f_poly(d));
      CHECK(writhe(e) == writhe(d) - d.sign(s.crossing));
    }
  }
}

TEST_CASE("R2 and R3 preserve the bracket") {
  for (const auto& name : kSmall) {
    const Diagram d = builtin(name);
    for (MoveKind k : framed_move_kinds()) {
      const auto sites = enumerate_sites(d, k);
      for (const MoveSite& s : sites) {
        const Diagram e = apply(d, s);
        CHECK(bracket_reduced(e) == bracket_reduced(d));
        CHECK(e.component_count() == d.component_count());
        // R3 can be applied to its own output.
        if (k == MoveKind::R2Add)
          for (const MoveSite& t : enumerate_sites(e, MoveKind::R3)) CHECK(bracket_reduced(apply(e, t)) == bracket_reduced(d));
      }
    }
  }
  CHECK_FALSE(enumerate_sites(builtin("unlink2"), MoveKind::R2Add).empty());
}

TEST_CASE("R2 pairs need opposite signs") {
  CHECK(enumerate_sites(parse_gauss("O1+U2+U1+O2+"), MoveKind::R2Remove).empty());
  CHECK(enumerate_sites(parse_gauss("O1+U2-U1+O2-"), MoveKind::R2Remove).size() == 1);
  CHECK(enumerate_sites(parse_gauss("O1+O2-U1+U2-"), MoveKind::R2Remove).size() == 1);
  CHECK(enumerate_sites(builtin("unknot"), MoveKind::R2Remove).empty());
  const Diagram e = apply(parse_gauss("O1+U2-U1+O2-"), enumerate_sites(parse_gauss("O1+U2-U1+O2-"), MoveKind::R2Remove)[0]);
  CHECK(e.crossing_count() == 0);
}

TEST_CASE("inapplicable sites are rejected") {
  const Diagram t = builtin("trefoil");
  CHECK_THROWS_AS(apply(t, MoveSite{.kind = MoveKind::R1Remove, .crossing = 1}), ValidationError);
  CHECK_THROWS_AS(apply(t, MoveSite{.kind = MoveKind::R2Remove, .crossing = 1, .crossing2 = 2}), ValidationError);
  CHECK_THROWS_AS(apply(t, MoveSite{.kind = MoveKind::KirbyDelete, .component = 0}), ValidationError);
  CHECK_THROWS_AS(apply(t, MoveSite{.kind = MoveKind::KirbyAdd, .sign = 2}), ValidationError);
  CHECK_THROWS_AS(apply(t, MoveSite{.kind = MoveKind::HandleSlide, .component = 0, .component2 = 0}), ValidationError);
}

TEST_CASE("kirby add and delete preserve Z") {
  for (const auto& name : kSmall) {
    const Diagram d = builtin(name);
    for (const MoveSite& s : enumerate_sites(d, MoveKind::KirbyAdd)) {
      const Diagram e = apply(d, s);
      CHECK(e.component_count() == d.component_count() + 1);
      for (int r : {3, 4, 5}) CHECK(near(normalized_wrt(e, r).normalized, normalized_wrt(d, r).normalized));
      bool restored = false;
      for (const MoveSite& t : enumerate_sites(e, MoveKind::KirbyDelete)) restored = restored || apply(e, t) == d;
      CHECK(restored);
    }
  }
}

TEST_CASE("sliding an unknot over a +1 kink") {
  const Diagram d = parse_gauss(";O1+U1+");
  const auto sites = enumerate_sites(d, MoveKind::HandleSlide);
  REQUIRE_FALSE(sites.empty());
  for (const MoveSite& s : sites) {
    const Diagram e = apply(d, s);
    if (s.component != 0) continue;
    // The slid unknot picks up the framing of the kink and links it once.
    CHECK(linking_matrix(e)[0][0] == 1);
    CHECK(std::abs(linking_matrix(e)[0][1]) == 1);
    CHECK(supporting_genus(e) == 0);
    for (int r : {3, 4, 5}) CHECK(near(normalized_wrt(e, r).normalized, normalized_wrt(d, r).normalized));
  }
  const MoveSite free_band{.kind = MoveKind::HandleSlide, .component = 0, .component2 = 1};
  CHECK(to_gauss(apply(d, free_band).canonical()) == "O1+O2+U2+U3+;O4+O3+U1+U4+");
}

TEST_CASE("handle slides act on the linking matrix by congruence") {
  for (const char* name : {"hopf+", "hopf-", "framed-pair", "unlink2"}) {
    const Diagram d = builtin(name);
    const LinkingMatrix m = linking_matrix(d);
    for (const MoveSite& s : enumerate_sites(d, MoveKind::HandleSlide)) {
      const Diagram e = apply(d, s);
      const LinkingMatrix n = linking_matrix(e);
      const int a = s.component, b = s.component2, sigma = s.flag ? -1 : 1;
      CHECK(n[a][a] == m[a][a] + m[b][b] + 2 * sigma * m[a][b]);
      CHECK(n[a][b] == m[a][b] + sigma * m[b][b]);
      CHECK(n[b][b] == m[b][b]);
      const Signature x = signature(m), y = signature(n);
      CHECK(x.b_plus == y.b_plus);
      CHECK(x.b_minus == y.b_minus);
      CHECK(abelianization(three_manifold_group(e)) == abelianization(three_manifold_group(d)));
    }
  }
}

TEST_CASE("handle slides on planar diagrams preserve Z") {
  for (const char* name : {"hopf+", "hopf-", "framed-pair", "unlink2"}) {
    const Diagram d = builtin(name);
    for (const MoveSite& s : enumerate_sites(d, MoveKind::HandleSlide)) {
      const Diagram e = apply(d, s);
      CHECK(supporting_genus(e) == 0);
      for (int r : {3, 4, 5}) CHECK(near(normalized_wrt(e, r).normalized, normalized_wrt(d, r).normalized));
    }
  }
}

TEST_CASE("random walks") {
  const Diagram t = builtin("trefoil");
  CHECK(random_walk(t, framed_move_kinds(), 0, 7) == t);
  std::vector<MoveSite> a, b;
  const Diagram x = random_walk(t, framed_move_kinds(), 4, 7, 12, &a);
  const Diagram y = random_walk(t, framed_move_kinds(), 4, 7, 12, &b);
  CHECK(x == y);
  CHECK(a == b);
  CHECK(a.size() == 4);
  CHECK(x.crossing_count() <= 12);
  CHECK(bracket_reduced(x) == bracket_reduced(t));
  CHECK(to_string(MoveKind::HandleSlide) == "handle-slide");
  CHECK(framed_move_kinds().size() == 3);
}
