// vkt: command-line front end for the virtual knot invariant library.
//
// Exit codes: 0 success, 1 computation or input error, 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "vkt/acceptance.hpp"
#include "vkt/bracket.hpp"
#include "vkt/conventions.hpp"
#include "vkt/diagram.hpp"
#include "vkt/errors.hpp"
#include "vkt/groups.hpp"
#include "vkt/moves.hpp"
#include "vkt/tangle.hpp"
#include "vkt/wrt.hpp"

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string code, file, builtin;
  bool code_given = false;
};

struct Options {
  Input input;
  std::string format = "text";
  int r = 3;
  std::vector<int> colors;
  std::uint64_t seed = 0;
  int steps = 1;
  std::string kind;
  int site = -1;
  bool list_sites = false;
  bool unreduced = false;
  bool three_manifold = false;
  int symmetric = 0;
  std::vector<int> criteria;
  std::string output;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--code", in.code, "extended Gauss code, e.g. \"O1+U1+\"")->each([&](const std::string&) { in.code_given = true; });
  cmd->add_option("--file", in.file, "file holding a Gauss code or the JSON diagram schema");
  cmd->add_option("--builtin", in.builtin, "name from builtin-list");
}

vkt::Diagram read_input(const Input& in) {
  const int given = (in.code_given ? 1 : 0) + (in.file.empty() ? 0 : 1) + (in.builtin.empty() ? 0 : 1);
  if (given != 1) throw UsageError("give exactly one of --code, --file, --builtin");
  if (in.code_given) return vkt::parse_diagram(in.code);
  if (!in.builtin.empty()) return vkt::builtin(in.builtin);
  std::ifstream f(in.file);
  if (!f) throw vkt::Error("cannot read " + in.file);
  std::stringstream ss;
  ss << f.rdbuf();
  return vkt::parse_diagram(ss.str());
}

// Rounded to the printed 6 significant digits so text and JSON agree.
double printed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  const double v = std::stod(buf);
  return v == 0.0 ? 0.0 : v;
}

json complex_json(vkt::Complex z) {
  const bool tiny_re = std::abs(z.real()) < 5e-7, tiny_im = std::abs(z.imag()) < 5e-7;
  return {{"re", tiny_re ? 0.0 : printed(z.real())}, {"im", tiny_im ? 0.0 : printed(z.imag())}, {"text", vkt::format_complex(z)}};
}

json diagram_json(const vkt::Diagram& d) {
  return {{"name", d.name()}, {"code", vkt::to_gauss(d)}, {"components", d.component_count()}, {"crossings", d.crossing_count()}};
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int cmd_bracket(const Options& o) {
  const vkt::Diagram d = read_input(o.input);
  const vkt::LaurentPoly b = o.unreduced ? vkt::bracket_unreduced(d) : vkt::bracket_reduced(d);
  json j{{"diagram", diagram_json(d)}, {"reduced", !o.unreduced}, {"bracket", b.to_string()}, {"writhe", vkt::writhe(d)},
         {"f", vkt::f_poly(d).to_string()}};
  emit(o, j, b.to_string() + "\n");
  return 0;
}

int cmd_jones(const Options& o) {
  const vkt::Diagram d = read_input(o.input);
  const std::string v = vkt::jones(d).to_string();
  emit(o, {{"diagram", diagram_json(d)}, {"jones", v}}, v + "\n");
  return 0;
}

int cmd_colored(const Options& o, bool r_given) {
  const vkt::Diagram d = read_input(o.input);
  std::vector<int> colors = o.colors;
  if (colors.empty()) colors.assign(static_cast<std::size_t>(d.component_count()), 1);
  if (static_cast<int>(colors.size()) != d.component_count()) throw UsageError("--colors needs one color per component");
  json j{{"diagram", diagram_json(d)}, {"colors", colors}};
  std::string text;
  if (r_given) {
    const vkt::Complex v = vkt::splice_and_evaluate(d, colors, vkt::RootParams::at_level(o.r));
    j["r"] = o.r;
    j["value"] = complex_json(v);
    text = vkt::format_complex(v) + "\n";
  } else {
    const std::string v = vkt::splice_and_evaluate_generic(d, colors).to_string();
    j["value"] = v;
    text = v + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_wrt(const Options& o) {
  const vkt::Diagram d = read_input(o.input);
  const vkt::WrtResult w = vkt::normalized_wrt(d, o.r);
  json j{{"diagram", diagram_json(d)},  {"r", w.r},           {"Z", complex_json(w.normalized)},
         {"unnormalized", complex_json(w.unnormalized)}, {"b_plus", w.b_plus}, {"b_minus", w.b_minus},
         {"n", w.n_sig},              {"mu", complex_json(w.mu)}, {"alpha", complex_json(w.alpha)},
         {"conventions", json::parse(vkt::selected_conventions().describe())}};
  std::ostringstream os;
  os << "Z = " << vkt::format_complex(w.normalized) << "\n"
     << "<K^w> = " << vkt::format_complex(w.unnormalized) << "\n"
     << "b+ = " << w.b_plus << ", b- = " << w.b_minus << ", n = " << w.n_sig << "\n";
  emit(o, j, os.str());
  return 0;
}

int cmd_group(const Options& o) {
  const vkt::Diagram d = read_input(o.input);
  const vkt::GroupPresentation p = o.three_manifold ? vkt::three_manifold_group(d) : vkt::wirtinger(d);
  const std::string ab = vkt::abelianization(p).to_string();
  json j{{"diagram", diagram_json(d)}, {"group", o.three_manifold ? "three-manifold" : "fundamental"},
         {"presentation", p.to_string()}, {"abelianization", ab}};
  std::string text = p.to_string() + "\nabelianization: " + ab + "\n";
  if (o.symmetric > 0) {
    const long long h = vkt::count_homomorphisms_to_symmetric(p, o.symmetric);
    j["homomorphisms_to_S" + std::to_string(o.symmetric)] = h;
    text += "homomorphisms to S" + std::to_string(o.symmetric) + ": " + std::to_string(h) + "\n";
  }
  emit(o, j, text);
  return 0;
}

std::vector<vkt::MoveKind> parse_kinds(const std::string& s) {
  if (s == "framed") return vkt::framed_move_kinds();
  if (s == "kirby") return vkt::kirby_move_kinds();
  for (auto k : {vkt::MoveKind::R1Add, vkt::MoveKind::R1Remove, vkt::MoveKind::R2Add, vkt::MoveKind::R2Remove,
                 vkt::MoveKind::R3, vkt::MoveKind::KirbyAdd, vkt::MoveKind::KirbyDelete, vkt::MoveKind::HandleSlide})
    if (vkt::to_string(k) == s) return {k};
  throw UsageError("unknown move kind '" + s + "'");
}

int cmd_move(const Options& o) {
  const vkt::Diagram d = read_input(o.input);
  const auto kinds = parse_kinds(o.kind);
  std::vector<vkt::MoveSite> sites;
  for (auto k : kinds)
    for (auto& s : vkt::enumerate_sites(d, k)) sites.push_back(s);

  if (o.list_sites) {
    json arr = json::array();
    std::string text;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      arr.push_back({{"index", i}, {"site", sites[i].to_string()}});
      text += std::to_string(i) + ": " + sites[i].to_string() + "\n";
    }
    emit(o, {{"diagram", diagram_json(d)}, {"sites", arr}}, text);
    return 0;
  }

  vkt::Diagram result;
  std::vector<vkt::MoveSite> applied;
  if (o.site >= 0) {
    if (o.site >= static_cast<int>(sites.size()))
      throw vkt::ValidationError("site " + std::to_string(o.site) + " out of range (" + std::to_string(sites.size()) + " sites)");
    applied.push_back(sites[static_cast<std::size_t>(o.site)]);
    result = vkt::apply(d, applied.front());
  } else {
    result = vkt::random_walk(d, kinds, o.steps, o.seed, vkt::crossing_budget(), &applied);
  }
  json moves = json::array();
  std::string text;
  for (const auto& s : applied) {
    moves.push_back(s.to_string());
    text += "# " + s.to_string() + "\n";
  }
  text += vkt::to_gauss(result) + "\n";
  emit(o, {{"input", diagram_json(d)}, {"moves", moves}, {"result", diagram_json(result)}}, text);
  return 0;
}

int cmd_verify(const Options& o) {
  const auto results = o.criteria.empty() ? vkt::run_acceptance() : vkt::run_acceptance(o.criteria);
  if (o.format == "json") std::cout << vkt::render_json(results);
  else std::cout << vkt::render_text(results);
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}

int cmd_builtins(const Options& o) {
  json arr = json::array();
  std::string text;
  for (const auto& name : vkt::builtin_names()) {
    const std::string code = vkt::to_gauss(vkt::builtin(name));
    arr.push_back({{"name", name}, {"code", code}});
    text += name + "\t" + (code.empty() ? "\"\"" : code) + "\n";
  }
  emit(o, arr, text);
  return 0;
}

int cmd_calibrate(const Options& o) {
  const std::string ledger = vkt::calibrate_conventions().to_json();
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw vkt::Error("cannot write " + o.output);
    f << ledger;
  } else {
    std::cout << ledger;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum invariants of virtual link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* bracket = app.add_subcommand("bracket", "bracket polynomial (reduced unless --unreduced)");
  add_input(bracket, o.input);
  bracket->add_flag("--unreduced", o.unreduced, "include the factor d of the outer loop");

  auto* jones = app.add_subcommand("jones", "Jones polynomial in t");
  add_input(jones, o.input);

  auto* colored = app.add_subcommand("colored", "colored bracket <K^a>, exact unless --r is given");
  add_input(colored, o.input);
  auto* colored_r = colored->add_option("--r", o.r, "root of unity level")->check(CLI::Range(3, 64));
  colored->add_option("--colors", o.colors, "one color per component (default all 1)")->delimiter(',');

  auto* wrt = app.add_subcommand("wrt", "normalized WRT invariant Z_K(r)");
  add_input(wrt, o.input);
  wrt->add_option("--r", o.r, "root of unity level")->check(CLI::Range(3, 64))->capture_default_str();

  auto* group = app.add_subcommand("group", "Wirtinger presentation and abelianization");
  add_input(group, o.input);
  group->add_flag("--three-manifold", o.three_manifold, "quotient by the longitudes");
  group->add_option("--symmetric", o.symmetric, "also count homomorphisms into S_n")->check(CLI::Range(1, 5));

  auto* move = app.add_subcommand("move", "apply moves: a chosen site, or a seeded random walk");
  add_input(move, o.input);
  move->add_option("--kind", o.kind, "move kind (r1-add, r3, handle-slide, ...) or the sets framed / kirby")->required();
  move->add_option("--site", o.site, "index into the enumerated sites");
  move->add_flag("--list", o.list_sites, "list the sites instead of applying");
  move->add_option("--seed", o.seed, "walk seed")->capture_default_str();
  move->add_option("--steps", o.steps, "walk length")->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--criterion", o.criteria, "only these criteria")->delimiter(',');

  app.add_subcommand("builtin-list", "list the named example diagrams");

  auto* calibrate = app.add_subcommand("calibrate", "convention calibration ledger (JSON)");
  calibrate->add_option("--output", o.output, "write to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bracket) return cmd_bracket(o);
    if (*jones) return cmd_jones(o);
    if (*colored) return cmd_colored(o, colored_r->count() > 0);
    if (*wrt) return cmd_wrt(o);
    if (*group) return cmd_group(o);
    if (*move) return cmd_move(o);
    if (*verify) return cmd_verify(o);
    if (*calibrate) return cmd_calibrate(o);
    return cmd_builtins(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
