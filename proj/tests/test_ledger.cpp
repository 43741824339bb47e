#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vkt/conventions.hpp"

using namespace vkt;

TEST_CASE("recorded conventions match a fresh calibration") {
  std::ifstream in(std::string(VKT_SOURCE_DIR) + "/conventions/ledger.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  const ConventionLedger fresh = calibrate_conventions();
  CHECK(nlohmann::json::parse(buf.str()) == nlohmann::json::parse(fresh.to_json()));
  CHECK(fresh.selected == selected_conventions());
  CHECK(fresh.candidates.size() == 8);
}

TEST_CASE("every candidate is scored against the same anchors") {
  const ConventionLedger l = calibrate_conventions();
  for (const auto& c : l.candidates) {
    CHECK(c.phase_matches <= c.modulus_matches);
    CHECK(c.phase_matches >= 0);
  }
  CHECK_FALSE(l.discrepancies.empty());
}
