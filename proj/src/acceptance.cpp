#include "vkt/acceptance.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <json.hpp>
#include <sstream>

#include "vkt/bracket.hpp"
#include "vkt/conventions.hpp"
#include "vkt/diagram.hpp"
#include "vkt/errors.hpp"
#include "vkt/groups.hpp"
#include "vkt/moves.hpp"
#include "vkt/nets.hpp"
#include "vkt/recoupling.hpp"
#include "vkt/tangle.hpp"
#include "vkt/wrt.hpp"

namespace vkt {

namespace {

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

bool close(Complex a, Complex b, double tol) {
  return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

struct Check {
  CriterionResult& out;
  bool ok(bool cond, const std::string& what) {
    if (!cond) {
      out.passed = false;
      out.details.push_back("mismatch: " + what);
    }
    return cond;
  }
};

// ---------------------------------------------------------------------------------------

struct PrintedValue {
  const char* quantity;
  const char* diagram;
  std::optional<ExampleVariant> variant;
  int r;
  bool normalized;
  Complex value;
};

const PrintedValue kPrinted[] = {
    {"Z_K(3)", "paperK", ExampleVariant::K, 3, true, {0.0, 0.0}},
    {"Z_Khat(3)", "paperKhat", ExampleVariant::KHat, 3, true, {0.0, 0.707107}},
    {"Z_K(4)", "paperK", ExampleVariant::K, 4, true, {-0.517982, 0.135299}},
    {"Z_Khat(4)", "paperKhat", ExampleVariant::KHat, 4, true, {-0.331106, 0.195807}},
    {"<K^w>(3)", "paperK", ExampleVariant::K, 3, false, {0.0, 0.0}},
    {"<Khat^w>(3)", "paperKhat", ExampleVariant::KHat, 3, false, {1.0, 1.0}},
    {"<K^w>(4)", "paperK", ExampleVariant::K, 4, false, {1.29289, 1.70711}},
    {"<Khat^w>(4)", "paperKhat", ExampleVariant::KHat, 4, false, {1.23044, 0.92388}},
};

CriterionResult worked_example_values() {
  CriterionResult res{1, "worked-example WRT values under the calibrated conventions", true, {}};
  const ConventionLedger ledger = calibrate_conventions();
  bool all_phase = true, all_modulus = true, any_full_phase = false;
  for (const auto& c : ledger.candidates) any_full_phase = any_full_phase || c.phase_matches == 8;
  res.details.push_back("conventions: " + ledger.selected.describe());
  for (const auto& d : ledger.discrepancies) {
    all_phase = all_phase && d.phase_match;
    all_modulus = all_modulus && d.modulus_match;
    const Complex printed(d.printed_re, d.printed_im), computed(d.computed_re, d.computed_im);
    res.details.push_back(fmt("%-12s printed %-22s computed %-22s |printed| %.6f |computed| %.6f  %s", d.quantity.c_str(),
                              format_complex(printed).c_str(), format_complex(computed).c_str(), std::abs(printed),
                              std::abs(computed),
                              d.phase_match ? "match" : (d.modulus_match ? "modulus only" : "differs")));
  }
  if (!any_full_phase) res.details.push_back("no convention combination reproduces every printed phase");
  res.passed = all_phase || (!any_full_phase && all_modulus);
  return res;
}

CriterionResult table_values() {
  CriterionResult res{2, "tabulated recoupling sums reproduce the worked-example values", true, {}};
  Check check{res};
  const ConventionSet conv = selected_conventions();
  int state_sum_agree = 0;
  for (const auto& p : kPrinted) {
    const Diagram d = builtin(p.diagram);
    Complex value = example_sums(*p.variant, p.r, conv.conjugate_lambda);
    if (p.normalized) {
      const int n = framing_signature(d).n_sig;
      value *= std::pow(wrt_mu(p.r), d.component_count() + 1) * std::pow(wrt_alpha(p.r), conv.alpha_exponent * n);
    }
    check.ok(close(value, p.value, 1e-4), std::string(p.quantity) + " table route gives " + format_complex(value));
    const WrtResult w = normalized_wrt(d, p.r, conv);
    const Complex state = p.normalized ? w.normalized : w.unnormalized;
    if (close(state, value, 1e-4)) ++state_sum_agree;
  }
  res.details.push_back(fmt("state-sum route agrees with the table route on %d of 8 values", state_sum_agree));
  return res;
}

CriterionResult normalization_anchors() {
  CriterionResult res{3, "normalization anchors", true, {}};
  Check check{res};
  const Diagram unknot = builtin("unknot"), framed = builtin("kink+");
  for (int r = 3; r <= 6; ++r) {
    const Complex z = normalized_wrt(unknot, r).normalized;
    check.ok(close(z, 1.0, 1e-9), fmt("Z(unknot, r=%d) = %s", r, format_complex(z).c_str()));
  }
  for (int r = 3; r <= 8; ++r) {
    const Complex lhs = wrt_mu(r) * unnormalized_wrt(framed, r);
    check.ok(close(lhs, wrt_alpha(r), 1e-9), fmt("mu <U^w> at r=%d is %s, alpha %s", r, format_complex(lhs).c_str(),
                                                 format_complex(wrt_alpha(r)).c_str()));
  }
  int compared = 0;
  for (const auto& name : builtin_names()) {
    const Diagram k = builtin(name);
    const Diagram with_u = disjoint_union(k, framed);
    for (int r : {3, 4}) {
      const Complex a = normalized_wrt(k, r).normalized, b = normalized_wrt(with_u, r).normalized;
      check.ok(close(a, b, 1e-6), fmt("Z(%s + U, r=%d) = %s vs %s", name.c_str(), r, format_complex(b).c_str(),
                                      format_complex(a).c_str()));
      ++compared;
    }
  }
  res.details.push_back(fmt("Z(K + U) = Z(K) checked on %d (diagram, r) pairs", compared));
  return res;
}

CriterionResult projector_suite() {
  CriterionResult res{4, "Jones-Wenzl projector identities at generic A", true, {}};
  Check check{res};
  using E = BrauerElement<DeltaFraction>;
  const DeltaFraction d(LaurentPoly::loop());
  auto extend = [](E x, int n) {
    while (x.n() < n) x = x.with_extra_strand();
    return x;
  };
  for (int n = 1; n <= 4; ++n) {
    const E t = jw_generic(n);
    check.ok(multiply(t, t, d).terms() == t.terms(), fmt("T_%d^2 != T_%d", n, n));
    for (int i = 1; i < n; ++i) {
      const E u(BrauerDiagram::cup_cap(n, i), DeltaFraction(1));
      check.ok(multiply(t, u, d).size() == 0, fmt("T_%d U_%d != 0", n, i));
      check.ok(multiply(u, t, d).size() == 0, fmt("U_%d T_%d != 0", i, n));
    }
    for (int m = 1; m <= n; ++m)
      check.ok(multiply(t, extend(jw_generic(m), n), d).terms() == t.terms(), fmt("T_%d T_%d != T_%d", n, m, n));
    const DeltaFraction cl = closure(t, d);
    check.ok(cl == DeltaFraction(delta_poly(n)), fmt("closure(T_%d) = %s", n, cl.to_string().c_str()));
  }
  res.details.push_back("n = 1..4: idempotence, U_i annihilation, absorption, closure = Delta_n (exact)");
  return res;
}

DeltaFraction printed_lemma_product(int n) {
  const DeltaFraction d(LaurentPoly::loop());
  DeltaFraction p = d - DeltaFraction(1);
  for (int k = 2; k <= n - 1; ++k) p *= d + DeltaFraction(delta_poly(k - 1)) * DeltaFraction::inverse_delta(k);
  return p;
}

CriterionResult lemma_product_check() {
  CriterionResult res{5, "closure of T_n times a virtual swap: product formula and nonzeroness", true, {}};
  const DeltaFraction d(LaurentPoly::loop());
  bool formula = true, nonzero = true;
  std::string zeros;
  for (int n = 2; n <= 5; ++n) {
    const DeltaFraction lhs = d * lemma_product_generic(n);
    const DeltaFraction printed = printed_lemma_product(n);
    const DeltaFraction closed = (d - DeltaFraction(1)) * DeltaFraction(delta_poly(n)) * DeltaFraction::inverse_delta(2);
    nonzero = nonzero && !lhs.is_zero();
    if (!(lhs == printed)) {
      formula = false;
      res.details.push_back(fmt("n=%d generic: d<cl(T_n E)> = %s, product formula = %s", n, lhs.to_string().c_str(),
                                printed.to_string().c_str()));
    }
    res.details.push_back(fmt("n=%d generic: d<cl(T_n E)> %s (d-1) Delta_n / Delta_2", n, lhs == closed ? "equals" : "differs from"));
    for (int r = 5; r <= 8; ++r) {
      if (n > r - 1) {
        res.details.push_back(fmt("n=%d r=%d skipped: T_n is undefined for n > r-1", n, r));
        continue;
      }
      const RootParams ctx = RootParams::at_level(r);
      const Complex value = ctx.d * lemma_product(n, ctx);
      const Complex expected = printed.evaluate(ctx.A);
      if (std::abs(value) <= 1e-9) {
        nonzero = false;
        zeros += fmt(" (n=%d, r=%d)", n, r);
      }
      if (!close(value, expected, 1e-9)) {
        formula = false;
        res.details.push_back(fmt("n=%d r=%d: value %s, product formula %s", n, r, format_complex(value).c_str(),
                                  format_complex(expected).c_str()));
      }
    }
  }
  res.details.push_back(nonzero ? std::string("nonzero for every n and r checked")
                                : "value vanishes at" + zeros + ", where Delta_n = 0");
  res.passed = formula && nonzero;
  return res;
}

CriterionResult net_oracles() {
  CriterionResult res{6, "theta and Tet closed forms against net evaluation", true, {}};
  Check check{res};
  int thetas = 0, tets = 0;
  double worst = 0;
  for (int r = 3; r <= 6; ++r) {
    const RootParams ctx = RootParams::at_level(r);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) {
          if (!admissible(a, b, c, r)) continue;
          const Complex f = theta(a, b, c, ctx), g = theta_net(a, b, c).evaluate(ctx);
          worst = std::max(worst, std::abs(f - g));
          check.ok(close(f, g, 1e-9), fmt("theta(%d,%d,%d) at r=%d", a, b, c, r));
          ++thetas;
        }
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int e = 0; e <= 2; ++e)
          for (int c = 0; c <= 2; ++c)
            for (int dd = 0; dd <= 2; ++dd)
              for (int f = 0; f <= 2; ++f) {
                if (!admissible(a, dd, e, r) || !admissible(b, c, e, r) || !admissible(a, b, f, r) ||
                    !admissible(c, dd, f, r))
                  continue;
                const Complex x = tet(a, b, e, c, dd, f, ctx), y = tet_net(a, b, e, c, dd, f).evaluate(ctx);
                worst = std::max(worst, std::abs(x - y));
                check.ok(close(x, y, 1e-9), fmt("Tet[%d %d %d; %d %d %d] at r=%d", a, b, e, c, dd, f, r));
                ++tets;
              }
  }
  res.details.push_back(fmt("%d theta nets and %d Tet nets, largest difference %.1e", thetas, tets, worst));
  return res;
}

CriterionResult invariance_walks() {
  CriterionResult res{7, "random move walks preserve the invariants", true, {}};
  Check check{res};
  const auto names = builtin_names();
  constexpr int kSeeds = 4, kSteps = 5;

  int framed = 0, framed_ok = 0;
  for (const auto& name : names)
    for (int seed = 0; seed < kSeeds; ++seed) {
      const Diagram d = builtin(name);
      const Diagram e = random_walk(d, framed_move_kinds(), kSteps, static_cast<std::uint64_t>(seed), 12);
      ++framed;
      if (check.ok(bracket_reduced(d) == bracket_reduced(e), fmt("framed walk %s seed %d", name.c_str(), seed)))
        ++framed_ok;
    }
  res.details.push_back(fmt("framed-move walks: bracket preserved on %d of %d", framed_ok, framed));

  int kirby = 0, z_ok = 0, group_ok = 0;
  int planar_slides = 0, planar_slides_ok = 0, surface_slides = 0, surface_slides_ok = 0;
  for (const auto& name : names)
    for (int seed = 0; seed < kSeeds; ++seed) {
      const Diagram d = builtin(name);
      std::vector<MoveSite> trace;
      const Diagram e = random_walk(d, kirby_move_kinds(), kSteps, static_cast<std::uint64_t>(seed), 10, &trace);
      ++kirby;
      const Complex z0 = normalized_wrt(d, 3).normalized, z1 = normalized_wrt(e, 3).normalized;
      if (check.ok(close(z0, z1, 1e-6), fmt("Kirby walk %s seed %d: Z(3) %s -> %s", name.c_str(), seed,
                                            format_complex(z0).c_str(), format_complex(z1).c_str())))
        ++z_ok;
      const AbelianInvariants g0 = abelianization(three_manifold_group(d));
      const AbelianInvariants g1 = abelianization(three_manifold_group(e));
      if (check.ok(g0 == g1, fmt("Kirby walk %s seed %d: abelianized group %s -> %s", name.c_str(), seed,
                                 g0.to_string().c_str(), g1.to_string().c_str())))
        ++group_ok;

      // Replay to see where the handle slides happened.
      Diagram cur = d;
      for (const MoveSite& s : trace) {
        const Diagram next = apply(cur, s);
        if (s.kind == MoveKind::HandleSlide) {
          const bool same = close(normalized_wrt(cur, 3).normalized, normalized_wrt(next, 3).normalized, 1e-6);
          if (supporting_genus(cur) == 0) ++planar_slides, planar_slides_ok += same;
          else ++surface_slides, surface_slides_ok += same;
        }
        cur = next;
      }
    }
  res.details.push_back(fmt("Kirby walks: Z(3) preserved on %d of %d, abelianized 3-manifold group on %d of %d", z_ok,
                            kirby, group_ok, kirby));
  res.details.push_back(fmt("handle slides on genus-0 diagrams preserving Z(3): %d of %d", planar_slides_ok, planar_slides));
  res.details.push_back(fmt("handle slides on diagrams of positive supporting genus preserving Z(3): %d of %d",
                            surface_slides_ok, surface_slides));
  return res;
}

CriterionResult group_anchors() {
  CriterionResult res{8, "3-manifold group abelianizations", true, {}};
  Check check{res};
  auto expect = [&](const std::string& diagram, bool three_manifold, const std::string& want) {
    const Diagram d = builtin(diagram);
    const std::string got = abelianization(three_manifold ? three_manifold_group(d) : wirtinger(d)).to_string();
    if (check.ok(got == want, diagram + (three_manifold ? " pi_M" : " pi_1") + " gives " + got))
      res.details.push_back(diagram + (three_manifold ? " pi_M: " : " pi_1: ") + got);
  };
  expect("unknot", true, "Z");
  expect("kink+", true, "1");
  expect("kink-", true, "1");
  expect("paperK", true, "Z/2");
  expect("paperKhat", true, "1");
  expect("paperK", false, "Z");
  expect("paperKhat", false, "Z");
  return res;
}

CriterionResult bracket_anchors() {
  CriterionResult res{9, "bracket anchors and R1 behaviour of f", true, {}};
  Check check{res};
  check.ok(bracket_reduced(builtin("unknot")) == LaurentPoly(1), "<unknot>");
  check.ok(bracket_reduced(builtin("kink+")) == -LaurentPoly::monomial(3), "<kink+> = " + bracket_reduced(builtin("kink+")).to_string());
  check.ok(bracket_reduced(builtin("hopf+")) == -LaurentPoly::monomial(4) - LaurentPoly::monomial(-4),
           "<hopf+> = " + bracket_reduced(builtin("hopf+")).to_string());
  int sites = 0;
  for (const auto& name : builtin_names()) {
    const Diagram d = builtin(name);
    const LaurentPoly f = f_poly(d);
    for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove})
      for (const MoveSite& s : enumerate_sites(d, k)) {
        ++sites;
        check.ok(f_poly(apply(d, s)) == f, name + " " + s.to_string());
      }
  }
  res.details.push_back(fmt("unknot 1, kink+ -A^3, hopf+ -A^4 - A^-4; f unchanged at %d R1 sites", sites));
  return res;
}

const std::vector<std::function<CriterionResult()>>& criteria() {
  static const std::vector<std::function<CriterionResult()>> all = {
      worked_example_values, table_values,      normalization_anchors, projector_suite, lemma_product_check,
      net_oracles,  invariance_walks,  group_anchors,         bracket_anchors};
  return all;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  return run_acceptance({1, 2, 3, 4, 5, 6, 7, 8, 9});
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& numbers) {
  std::vector<CriterionResult> out;
  for (int n : numbers) {
    if (n < 1 || n > static_cast<int>(criteria().size())) throw ValidationError("no acceptance criterion " + std::to_string(n));
    try {
      out.push_back(criteria()[static_cast<std::size_t>(n - 1)]());
    } catch (const std::exception& e) {
      out.push_back(CriterionResult{n, "criterion " + std::to_string(n), false, {std::string("error: ") + e.what()}});
    }
  }
  return out;
}

std::string render_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.number << " " << r.title << "\n";
    for (const auto& line : r.details) os << "    " << line << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : results)
    j.push_back({{"criterion", r.number}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
  return j.dump(2) + "\n";
}

}  // namespace vkt
