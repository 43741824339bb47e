#include <doctest.h>

#include <cstdio>
#include <sys/wait.h>

#include <json.hpp>

#include "vkt/roots.hpp"
#include "vkt/wrt.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(VKT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("bracket verb") {
  const Run r = run("bracket --code 'O1+U1+'");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "-A^3"));
  const Run u = run("bracket --builtin unknot --unreduced");
  CHECK(contains(u.out, "-A^2 - A^-2"));
}

TEST_CASE("wrt verb reports the library value") {
  const Run r = run("wrt --builtin paperKhat --r 3 --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  const vkt::Complex z = vkt::normalized_wrt(vkt::builtin("paperKhat"), 3).normalized;
  CHECK(j["Z"]["text"] == vkt::format_complex(z));
  CHECK(std::hypot(j["Z"]["re"].get<double>(), j["Z"]["im"].get<double>()) == doctest::Approx(0.707107).epsilon(1e-5));
  CHECK(j["r"] == 3);
  const Run t = run("wrt --builtin paperK");
  CHECK(contains(t.out, "Z = 0"));
}

TEST_CASE("group verb") {
  const Run r = run("group --builtin paperK --three-manifold");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "abelianization: Z/2"));
  const Run s = run("group --builtin trefoil --symmetric 3 --format json");
  CHECK(nlohmann::json::parse(s.out)["homomorphisms_to_S3"] == 12);
}

TEST_CASE("move verb") {
  const Run list = run("move --builtin trefoil --kind r1-add --list --format json");
  REQUIRE(list.status == 0);
  CHECK_FALSE(nlohmann::json::parse(list.out)["sites"].empty());
  const Run walk = run("move --builtin trefoil --kind framed --steps 3 --seed 4 --format json");
  REQUIRE(walk.status == 0);
  const auto j = nlohmann::json::parse(walk.out);
  CHECK(j["moves"].size() == 3);
  // Text and JSON agree on the rewritten code.
  const Run again = run("move --builtin trefoil --kind framed --steps 3 --seed 4");
  CHECK(contains(again.out, j["result"]["code"].get<std::string>()));
}

TEST_CASE("listing builtins and JSON output") {
  const Run r = run("builtin-list --format json");
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out).size() == vkt::builtin_names().size());
  const Run j = run("jones --builtin trefoil --format json");
  CHECK(nlohmann::json::parse(j.out)["jones"] == "-t^4 + t^3 + t");
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("bracket").status == 2);
  CHECK(run("bracket --code O1+U1+ --builtin unknot").status == 2);
  CHECK(run("bracket --code O1+X").status == 1);
  CHECK(run("wrt --builtin unknot --r 2").status == 2);
  CHECK(run("colored --builtin unknot --r 3 --colors 5").status == 1);
  CHECK(run("--help").status == 0);
  CHECK(run("verify --criterion 3,4").status == 0);
}
