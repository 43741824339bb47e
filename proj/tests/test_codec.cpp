#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random_diagrams.hpp"
#include "vkt/diagram.hpp"
#include "vkt/errors.hpp"

using namespace vkt;

TEST_CASE("gauss codes round-trip for every builtin") {
  for (const auto& name : builtin_names()) {
    const Diagram d = builtin(name);
    CHECK(parse_gauss(to_gauss(d)) == d);
    CHECK(parse_diagram(to_json_string(d)) == d);
    CHECK(parse_json_diagram(to_json_string(d, 2)).name() == name);
  }
}

TEST_CASE("empty code is the crossingless unknot") {
  const Diagram u = parse_gauss("");
  CHECK(u.component_count() == 1);
  CHECK(u.crossing_count() == 0);
  CHECK(to_gauss(u).empty());
  CHECK(parse_gauss(" ; ").component_count() == 2);
  CHECK(Diagram().empty());
  CHECK_THROWS_AS(to_gauss(Diagram()), ValidationError);
}

TEST_CASE("whitespace and lower case are accepted") {
  CHECK(parse_gauss(" o1+ u2+ ;\n O2+ U1+ ") == builtin("hopf+"));
}

TEST_CASE("parse errors carry the offending position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_gauss(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::size_t(-1);
  };
  CHECK(position_of("O1+X") == 3);
  CHECK(position_of("O+") == 1);
  CHECK(position_of("O1U1+") == 2);
  CHECK(position_of("O0+U0+") == 1);
  CHECK_THROWS_AS(parse_json_diagram("{\"components\": [[{\"id\": 1}]]}"), ParseError);
  CHECK_THROWS_AS(parse_json_diagram("{"), ParseError);
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(parse_gauss("O1+"), ValidationError);
  CHECK_THROWS_AS(parse_gauss("O1+O1+"), ValidationError);
  CHECK_THROWS_AS(parse_gauss("O1+U1-"), ValidationError);
  CHECK_THROWS_AS(parse_gauss("U1+U1+"), ValidationError);
}

TEST_CASE("canonical renumbers by first appearance") {
  const Diagram d = parse_gauss("O7+U3-;O3-U7+");
  CHECK(to_gauss(d.canonical()) == "O1+U2-;O2-U1+");
}

TEST_CASE("writhe, framing and linking numbers") {
  CHECK(writhe(builtin("trefoil")) == 3);
  CHECK(writhe(builtin("figure8")) == 0);
  CHECK(self_writhe(builtin("framed-pair"), 1) == 1);
  CHECK(linking_number(builtin("hopf+"), 0, 1).twice == 2);
  CHECK(linking_number(builtin("hopf-"), 0, 1).twice == -2);
  const HalfInteger half = linking_number(builtin("vhopf"), 0, 1);
  CHECK_FALSE(half.is_integer());
  CHECK(half.to_string() == "1/2");
  CHECK_THROWS_AS(linking_matrix(builtin("vhopf")), ValidationError);
  CHECK(linking_matrix(builtin("hopf+")) == LinkingMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("linking numbers agree with direct counting on random diagrams") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram d = testing_support::random_diagram(rng, 1 + static_cast<int>(rng() % 6), 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(linking_number(d, i, j).value() == oracle::linking(d, i, j));
  }
}

TEST_CASE("cabling multiplies crossings and preserves framings") {
  const Diagram t = builtin("trefoil");
  const Diagram t2 = cable(t, 2);
  CHECK(t2.component_count() == 2);
  CHECK(t2.crossing_count() == 12);
  // Each copy keeps the self-writhe, and the two copies link w times.
  CHECK(self_writhe(t2, 0) == 3);
  CHECK(self_writhe(t2, 1) == 3);
  CHECK(linking_number(t2, 0, 1).twice == 6);

  const Diagram h = cable(builtin("hopf+"), std::vector<int>{2, 3});
  CHECK(h.component_count() == 5);
  CHECK(h.crossing_count() == 12);
  CHECK(cable(t, 1) == t);
  CHECK(cable(t, 0).empty());
  CHECK(cable(builtin("hopf+"), std::vector<int>{1, 0}).crossing_count() == 0);
  CHECK_THROWS_AS(cable(t, std::vector<int>{1, 1}), ValidationError);
}

TEST_CASE("disjoint union shifts ids") {
  const Diagram u = disjoint_union(builtin("kink+"), builtin("kink+"));
  CHECK(to_gauss(u) == "O1+U1+;O2+U2+");
}

TEST_CASE("supporting genus separates classical from essentially virtual diagrams") {
  for (const char* name : {"unknot", "kink+", "hopf+", "trefoil", "figure8", "framed-pair"})
    CHECK(supporting_genus(builtin(name)) == 0);
  CHECK(supporting_genus(builtin("vtrefoil")) == 1);
  CHECK(supporting_genus(builtin("vhopf")) == 1);
  CHECK(supporting_genus(cable(builtin("figure8"), 2)) == 0);
  CHECK(supporting_genus(cable(builtin("vhopf"), 3)) == 1);
}
