#include <array>
#include <string>

#include "vkt/diagram.hpp"
#include "vkt/errors.hpp"

namespace vkt {

namespace {

struct Entry {
  const char* name;
  const char* code;
};

// paperK / paperKhat are the output of the exhaustive search in tests/test_builtin_search.cpp:
// the first single-component code with <= 3 crossings (ordered by crossing count, then code
// string) with pi_M abelianization Z/2, Z(3) = 0 and n(K) = +1; paperKhat adds the kink that
// makes pi_M trivial.
constexpr std::array<Entry, 13> kRegistry{{
    {"unknot", ""},
    {"unlink2", ";"},
    {"kink+", "O1+U1+"},
    {"kink-", "O1-U1-"},
    {"hopf+", "O1+U2+;O2+U1+"},
    {"hopf-", "O1-U2-;O2-U1-"},
    {"trefoil", "O1+U2+O3+U1+O2+U3+"},
    {"figure8", "O1+U2-O3-U1+O4+U3-O2-U4+"},
    {"vtrefoil", "O1+U2+U1+O2+"},
    {"vhopf", "O1+;U1+"},
    {"framed-pair", ";O1+U1+"},
    {"paperK", "O1+O2+U2+U1+"},
    {"paperKhat", "O1+O2+U2+U1+O3-U3-"},
}};

}  // namespace

Diagram builtin(std::string_view name) {
  for (const auto& e : kRegistry)
    if (name == e.name) return parse_gauss(e.code).with_name(e.name);
  throw ValidationError("unknown builtin diagram '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& e : kRegistry) names.emplace_back(e.name);
  return names;
}

}  // namespace vkt
