#include "vkt/moves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "vkt/errors.hpp"

namespace vkt {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "r1-add";
    case MoveKind::R1Remove: return "r1-remove";
    case MoveKind::R2Add: return "r2-add";
    case MoveKind::R2Remove: return "r2-remove";
    case MoveKind::R3: return "r3";
    case MoveKind::KirbyAdd: return "kirby-add";
    case MoveKind::KirbyDelete: return "kirby-delete";
    case MoveKind::HandleSlide: return "handle-slide";
  }
  return "?";
}

std::string MoveSite::to_string() const {
  const std::string s = sign > 0 ? "+" : "-";
  switch (kind) {
    case MoveKind::R1Add:
      return "r1-add" + s + " component " + std::to_string(component) + " position " + std::to_string(index) +
             (flag ? " under-first" : "");
    case MoveKind::R1Remove: return "r1-remove crossing " + std::to_string(crossing);
    case MoveKind::R2Add:
      return "r2-add over " + std::to_string(component) + ":" + std::to_string(index) + " under " +
             std::to_string(component2) + ":" + std::to_string(index2) + " sign " + s + (flag ? " reversed" : "");
    case MoveKind::R2Remove:
      return "r2-remove crossings " + std::to_string(crossing) + "," + std::to_string(crossing2);
    case MoveKind::R3:
      return "r3 crossings " + std::to_string(crossing) + "," + std::to_string(crossing2) + "," + std::to_string(crossing3);
    case MoveKind::KirbyAdd: return "kirby-add" + s;
    case MoveKind::KirbyDelete: return "kirby-delete component " + std::to_string(component);
    case MoveKind::HandleSlide:
      if (crossing == 0)
        return "handle-slide " + std::to_string(component) + " over " + std::to_string(component2) + " free band at " +
               std::to_string(index2) + (flag ? " reversed" : "");
      return "handle-slide " + std::to_string(component) + " over " + std::to_string(component2) + " at crossing " +
             std::to_string(crossing) + (index ? " after" : " before") + "/" + (index2 ? "after" : "before") +
             (flag ? " reversed" : "");
  }
  return "?";
}

namespace {

using Comps = std::vector<Component>;

int fresh_id(const Diagram& d) { return d.max_id() + 1; }

void check_arc(const Diagram& d, int comp, int index) {
  if (comp < 0 || comp >= d.component_count()) throw ValidationError("no such component");
  const int n = static_cast<int>(d.component(comp).size());
  if (index < 0 || index > std::max(n - 1, 0)) throw ValidationError("no such arc position");
}

// True when passage b immediately follows passage a along one component (cyclically), with
// the component long enough that the order is unambiguous.
bool follows(const Diagram& d, Location a, Location b) {
  if (a.component != b.component) return false;
  const int n = static_cast<int>(d.component(a.component).size());
  return n >= 3 && (a.index + 1) % n == b.index;
}

bool adjacent_any(const Diagram& d, Location a, Location b) {
  if (a.component != b.component) return false;
  const int n = static_cast<int>(d.component(a.component).size());
  return (a.index + 1) % n == b.index || (b.index + 1) % n == a.index;
}

Diagram remove_crossings(const Diagram& d, const std::set<int>& ids) {
  Comps out;
  for (const auto& comp : d.components()) {
    Component c;
    for (const auto& ref : comp)
      if (!ids.count(ref.id)) c.push_back(ref);
    out.push_back(std::move(c));
  }
  return Diagram(std::move(out), d.name());
}

// ---- R3 geometry -------------------------------------------------------------------------
//
// Key of a triangle: crossings p = (top, middle), q = (top, bottom), s = (middle, bottom).
// Orders record which passage comes first along each strand; signs are those of p, q, s.
struct R3Key {
  bool top_p_first;
  bool middle_p_first;
  bool bottom_q_first;
  int sp, sq, ss;
  auto tie() const { return std::make_tuple(top_p_first, middle_p_first, bottom_q_first, sp, sq, ss); }
  bool operator<(const R3Key& o) const { return tie() < o.tie(); }
};

// All keys realized by three straight oriented lines, for both triangle shapes and every
// assignment of heights and directions. Moving one line across the opposite vertex reverses
// all three orders and keeps the signs, so the set is closed under that rewrite.
const std::set<R3Key>& r3_table() {
  static const std::set<R3Key> table = [] {
    std::set<R3Key> keys;
    const double pi = std::acos(-1.0);
    for (double offset : {1.0, -1.0}) {
      std::array<std::array<double, 2>, 3> dir{}, base{};
      for (int i = 0; i < 3; ++i) {
        const double t = pi * i / 3.0;
        dir[static_cast<std::size_t>(i)] = {std::cos(t), std::sin(t)};
        // Normal offset from the origin selects which way the triangle points.
        base[static_cast<std::size_t>(i)] = {-std::sin(t) * offset, std::cos(t) * offset};
      }
      std::array<int, 3> roles{0, 1, 2};  // roles[top, middle, bottom] = line index
      do {
        for (int o = 0; o < 8; ++o) {
          std::array<std::array<double, 2>, 3> u{};
          for (int i = 0; i < 3; ++i) {
            const double f = (o >> i) & 1 ? -1.0 : 1.0;
            u[static_cast<std::size_t>(i)] = {f * dir[static_cast<std::size_t>(i)][0], f * dir[static_cast<std::size_t>(i)][1]};
          }
          // Parameter along line i of its meeting with line j.
          auto param = [&](int i, int j) {
            const auto& pi_ = base[static_cast<std::size_t>(i)];
            const auto& ui = u[static_cast<std::size_t>(i)];
            const auto& pj = base[static_cast<std::size_t>(j)];
            const auto& uj = u[static_cast<std::size_t>(j)];
            const double den = ui[0] * uj[1] - ui[1] * uj[0];
            return ((pj[0] - pi_[0]) * uj[1] - (pj[1] - pi_[1]) * uj[0]) / den;
          };
          auto sign = [&](int over, int under) {
            const auto& a = u[static_cast<std::size_t>(over)];
            const auto& b = u[static_cast<std::size_t>(under)];
            return a[0] * b[1] - a[1] * b[0] > 0 ? 1 : -1;
          };
          const int t = roles[0], m = roles[1], b = roles[2];
          keys.insert(R3Key{param(t, m) < param(t, b), param(m, t) < param(m, b), param(b, t) < param(b, m),
                            sign(t, m), sign(t, b), sign(m, b)});
        }
      } while (std::next_permutation(roles.begin(), roles.end()));
    }
    return keys;
  }();
  return table;
}

struct R3Match {
  Location tp, tq, mp, ms, bq, bs;
  R3Key key;
};

std::optional<R3Match> match_r3(const Diagram& d, int p, int q, int s) {
  if (p == q || q == s || p == s) return std::nullopt;
  R3Match m;
  m.tp = d.over(p);
  m.tq = d.over(q);
  m.mp = d.under(p);
  m.ms = d.over(s);
  m.bq = d.under(q);
  m.bs = d.under(s);
  auto order = [&](Location a, Location b) -> std::optional<bool> {
    if (follows(d, a, b)) return true;
    if (follows(d, b, a)) return false;
    return std::nullopt;
  };
  const auto t = order(m.tp, m.tq), mid = order(m.mp, m.ms), bot = order(m.bq, m.bs);
  if (!t || !mid || !bot) return std::nullopt;
  m.key = R3Key{*t, *mid, *bot, d.sign(p), d.sign(q), d.sign(s)};
  if (!r3_table().count(m.key)) return std::nullopt;
  return m;
}

Diagram apply_r3(const Diagram& d, const MoveSite& site) {
  const auto m = match_r3(d, site.crossing, site.crossing2, site.crossing3);
  if (!m) throw ValidationError("no R3 triangle at " + site.to_string());
  Comps c = d.components();
  auto swap_pair = [&](Location a, Location b) {
    auto& comp = c[static_cast<std::size_t>(a.component)];
    std::swap(comp[static_cast<std::size_t>(a.index)], comp[static_cast<std::size_t>(b.index)]);
  };
  swap_pair(m->tp, m->tq);
  swap_pair(m->mp, m->ms);
  swap_pair(m->bq, m->bs);
  return Diagram(std::move(c), d.name());
}

// ---- R1 / R2 -----------------------------------------------------------------------------

Diagram apply_r1_add(const Diagram& d, const MoveSite& site) {
  check_arc(d, site.component, site.index);
  if (site.sign != 1 && site.sign != -1) throw ValidationError("kink sign must be +1 or -1");
  Comps c = d.components();
  const int id = fresh_id(d);
  auto& comp = c[static_cast<std::size_t>(site.component)];
  const CrossingRef o{id, Role::Over, site.sign}, u{id, Role::Under, site.sign};
  const auto at = comp.begin() + site.index;
  if (site.flag) comp.insert(at, {u, o});
  else comp.insert(at, {o, u});
  return Diagram(std::move(c), d.name());
}

bool r1_removable(const Diagram& d, int id) {
  const Location o = d.over(id), u = d.under(id);
  return adjacent_any(d, o, u);
}

Diagram apply_r1_remove(const Diagram& d, const MoveSite& site) {
  if (site.crossing <= 0 || site.crossing > d.max_id()) throw ValidationError("no such crossing");
  const auto ids = d.crossing_ids();
  if (!std::binary_search(ids.begin(), ids.end(), site.crossing)) throw ValidationError("no such crossing");
  if (!r1_removable(d, site.crossing)) throw ValidationError("crossing is not a kink");
  return remove_crossings(d, {site.crossing});
}

Diagram apply_r2_add(const Diagram& d, const MoveSite& site) {
  check_arc(d, site.component, site.index);
  check_arc(d, site.component2, site.index2);
  if (site.component == site.component2 && site.index == site.index2)
    throw ValidationError("R2 needs two distinct arcs");
  if (site.sign != 1 && site.sign != -1) throw ValidationError("crossing sign must be +1 or -1");
  const int a = fresh_id(d), b = a + 1;
  const std::vector<CrossingRef> over{{a, Role::Over, site.sign}, {b, Role::Over, -site.sign}};
  std::vector<CrossingRef> under{{a, Role::Under, site.sign}, {b, Role::Under, -site.sign}};
  if (site.flag) std::swap(under[0], under[1]);
  Comps c = d.components();
  // Insert at the later position first so the earlier index stays valid.
  std::vector<std::tuple<int, int, const std::vector<CrossingRef>*>> inserts{
      {site.component, site.index, &over}, {site.component2, site.index2, &under}};
  std::sort(inserts.begin(), inserts.end(), [](const auto& x, const auto& y) {
    return std::make_pair(std::get<0>(x), std::get<1>(x)) > std::make_pair(std::get<0>(y), std::get<1>(y));
  });
  for (const auto& [comp, idx, refs] : inserts) {
    auto& v = c[static_cast<std::size_t>(comp)];
    v.insert(v.begin() + idx, refs->begin(), refs->end());
  }
  return Diagram(std::move(c), d.name());
}

bool r2_removable(const Diagram& d, int a, int b) {
  if (a == b || d.sign(a) != -d.sign(b)) return false;
  const Location oa = d.over(a), ob = d.over(b), ua = d.under(a), ub = d.under(b);
  const bool overs = follows(d, oa, ob) || follows(d, ob, oa) ||
                     (oa.component == ob.component && d.component(oa.component).size() == 2);
  const bool unders = follows(d, ua, ub) || follows(d, ub, ua) ||
                      (ua.component == ub.component && d.component(ua.component).size() == 2);
  return overs && unders;
}

Diagram apply_r2_remove(const Diagram& d, const MoveSite& site) {
  const auto ids = d.crossing_ids();
  for (int id : {site.crossing, site.crossing2})
    if (!std::binary_search(ids.begin(), ids.end(), id)) throw ValidationError("no such crossing");
  if (!r2_removable(d, site.crossing, site.crossing2)) throw ValidationError("crossings do not form a bigon");
  return remove_crossings(d, {site.crossing, site.crossing2});
}

// ---- Kirby moves -------------------------------------------------------------------------

bool isolated_kink(const Diagram& d, int comp) {
  const Component& c = d.component(comp);
  return c.size() == 2 && c[0].id == c[1].id;
}

Diagram apply_kirby_add(const Diagram& d, const MoveSite& site) {
  if (site.sign != 1 && site.sign != -1) throw ValidationError("framing must be +1 or -1");
  Comps c = d.components();
  const int id = fresh_id(d);
  c.push_back({{id, Role::Over, site.sign}, {id, Role::Under, site.sign}});
  return Diagram(std::move(c), d.name());
}

Diagram apply_kirby_delete(const Diagram& d, const MoveSite& site) {
  if (site.component < 0 || site.component >= d.component_count()) throw ValidationError("no such component");
  if (!isolated_kink(d, site.component)) throw ValidationError("component is not an isolated +-1-framed unknot");
  Comps c = d.components();
  c.erase(c.begin() + site.component);
  return Diagram(std::move(c), d.name());
}

// Cabled-diagram position of original passage `t` of component `comp`.
int cabled_position(const Diagram& d, int comp, int t, const std::vector<int>& counts) {
  int pos = 0;
  const Component& c = d.component(comp);
  for (int k = 0; k < t; ++k) {
    const CrossingRef& ref = c[static_cast<std::size_t>(k)];
    const int other = ref.role == Role::Over ? d.under(ref.id).component : d.over(ref.id).component;
    pos += counts[static_cast<std::size_t>(other)];
  }
  return pos;
}

// The band of a slide at crossing x sits in one quadrant of the crossing between A and the
// second copy B1. Entering both strands (or leaving both) forces B1 to be reversed.
bool quadrant_needs_reversal(int a_side, int b_side) { return a_side == b_side; }

// Slide component A over B: replace B by its blackboard 2-cable and band A to the second copy.
Diagram apply_handle_slide(const Diagram& d, const MoveSite& site) {
  const int a = site.component, b = site.component2;
  if (a < 0 || b < 0 || a >= d.component_count() || b >= d.component_count() || a == b)
    throw ValidationError("handle slide needs two different components");
  std::vector<int> counts(static_cast<std::size_t>(d.component_count()), 1);
  counts[static_cast<std::size_t>(b)] = 2;
  const Diagram cabled = cable(d, counts);
  // B's copies are consecutive in the cable.
  auto cabled_index = [&](int i) { return i + (i > b ? 1 : 0); };
  Component copy = cabled.component(cabled_index(b) + 1);
  const Component& ca = cabled.component(cabled_index(a));

  int foot_a = 0, foot_b = 0;
  if (site.crossing == 0) {
    // Free band: only when one of the two circles has no classical crossings and can be
    // detoured next to the other from either side.
    if (!d.component(a).empty() && !d.component(b).empty())
      throw ValidationError("a free band needs a crossingless component");
    check_arc(d, b, site.index2);
    if (!d.component(b).empty()) foot_b = cabled_position(d, b, site.index2, counts);
  } else {
    const Location oa = d.over(site.crossing), ua = d.under(site.crossing);
    Location on_a, on_b;
    if (oa.component == a && ua.component == b) on_a = oa, on_b = ua;
    else if (oa.component == b && ua.component == a) on_a = ua, on_b = oa;
    else throw ValidationError("crossing does not join the two components");
    if (site.index < 0 || site.index > 1 || site.index2 < 0 || site.index2 > 1)
      throw ValidationError("band sides must be 0 (before) or 1 (after)");
    if (site.flag != quadrant_needs_reversal(site.index, site.index2))
      throw ValidationError("band orientation does not match its quadrant");
    const int lb = cabled_position(d, b, on_b.index, counts);
    const int block = cabled_position(d, a, on_a.index, counts);
    const int id = copy[static_cast<std::size_t>(lb)].id;
    const int la = ca[static_cast<std::size_t>(block)].id == id ? block : block + 1;
    foot_a = (la + site.index) % static_cast<int>(ca.size());
    foot_b = (lb + site.index2) % static_cast<int>(copy.size());
  }

  if (!copy.empty()) std::rotate(copy.begin(), copy.begin() + foot_b, copy.end());
  Component merged(ca.begin() + foot_a, ca.end());
  merged.insert(merged.end(), ca.begin(), ca.begin() + foot_a);

  std::multiset<int> in_copy;
  for (const auto& ref : copy) in_copy.insert(ref.id);
  // Reversing the copy flips every crossing it shares with another strand.
  auto flip_shared = [&](Component& comp) {
    if (!site.flag) return;
    for (auto& ref : comp)
      if (in_copy.count(ref.id) == 1) ref.sign = -ref.sign;
  };
  if (site.flag) {
    std::reverse(copy.begin(), copy.end());
    flip_shared(copy);
    flip_shared(merged);
  }
  merged.insert(merged.end(), copy.begin(), copy.end());

  Comps out;
  for (int i = 0; i < d.component_count(); ++i) {
    if (i == a) {
      out.push_back(merged);
    } else {
      Component comp = cabled.component(cabled_index(i));
      flip_shared(comp);
      out.push_back(std::move(comp));
    }
  }
  return Diagram(std::move(out), d.name());
}

std::vector<std::pair<int, int>> arcs(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < d.component_count(); ++c) {
    const int n = static_cast<int>(d.component(c).size());
    for (int p = 0; p < std::max(n, 1); ++p) out.emplace_back(c, p);
  }
  return out;
}

}  // namespace

Diagram apply(const Diagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::R1Add: return apply_r1_add(d, site);
    case MoveKind::R1Remove: return apply_r1_remove(d, site);
    case MoveKind::R2Add: return apply_r2_add(d, site);
    case MoveKind::R2Remove: return apply_r2_remove(d, site);
    case MoveKind::R3: return apply_r3(d, site);
    case MoveKind::KirbyAdd: return apply_kirby_add(d, site);
    case MoveKind::KirbyDelete: return apply_kirby_delete(d, site);
    case MoveKind::HandleSlide: return apply_handle_slide(d, site);
  }
  throw ValidationError("unknown move kind");
}

std::vector<MoveSite> enumerate_sites(const Diagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  const auto ids = d.crossing_ids();
  switch (kind) {
    case MoveKind::R1Add:
      for (auto [c, p] : arcs(d))
        for (int s : {1, -1})
          for (bool under_first : {false, true}) {
            MoveSite m{.kind = kind, .component = c, .index = p, .sign = s, .flag = under_first};
            out.push_back(m);
          }
      break;
    case MoveKind::R1Remove:
      for (int id : ids)
        if (r1_removable(d, id)) out.push_back(MoveSite{.kind = kind, .crossing = id});
      break;
    case MoveKind::R2Add: {
      const auto all = arcs(d);
      for (auto [c1, p1] : all)
        for (auto [c2, p2] : all) {
          if (c1 == c2 && p1 == p2) continue;
          for (int s : {1, -1})
            for (bool rev : {false, true})
              out.push_back(MoveSite{.kind = kind, .component = c1, .index = p1, .component2 = c2, .index2 = p2,
                                     .sign = s, .flag = rev});
        }
      break;
    }
    case MoveKind::R2Remove:
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
          if (r2_removable(d, ids[i], ids[j]))
            out.push_back(MoveSite{.kind = kind, .crossing = ids[i], .crossing2 = ids[j]});
      break;
    case MoveKind::R3:
      for (int p : ids)
        for (int q : ids)
          for (int s : ids)
            if (match_r3(d, p, q, s)) out.push_back(MoveSite{.kind = kind, .crossing = p, .crossing2 = q, .crossing3 = s});
      break;
    case MoveKind::KirbyAdd:
      for (int s : {1, -1}) out.push_back(MoveSite{.kind = kind, .sign = s});
      break;
    case MoveKind::KirbyDelete:
      for (int c = 0; c < d.component_count(); ++c)
        if (isolated_kink(d, c)) out.push_back(MoveSite{.kind = kind, .component = c});
      break;
    case MoveKind::HandleSlide:
      for (int a = 0; a < d.component_count(); ++a)
        for (int b = 0; b < d.component_count(); ++b) {
          if (a == b) continue;
          if (d.component(a).empty() || d.component(b).empty()) {
            const int nb = std::max<int>(1, static_cast<int>(d.component(b).size()));
            for (int pb = 0; pb < nb; ++pb)
              for (bool rev : {false, true})
                out.push_back(MoveSite{.kind = kind, .component = a, .component2 = b, .index2 = pb, .flag = rev});
            continue;
          }
          for (int id : ids) {
            const int oc = d.over(id).component, uc = d.under(id).component;
            if (!((oc == a && uc == b) || (oc == b && uc == a))) continue;
            for (int sa : {0, 1})
              for (int sb : {0, 1})
                out.push_back(MoveSite{.kind = kind, .component = a, .index = sa, .component2 = b, .index2 = sb,
                                       .crossing = id, .flag = quadrant_needs_reversal(sa, sb)});
          }
        }
      break;
  }
  return out;
}

namespace {

// Crossing count after applying `site`, without building the diagram.
int resulting_crossings(const Diagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::R1Add:
    case MoveKind::KirbyAdd: return d.crossing_count() + 1;
    case MoveKind::R1Remove: return d.crossing_count() - 1;
    case MoveKind::R2Add: return d.crossing_count() + 2;
    case MoveKind::R2Remove: return d.crossing_count() - 2;
    case MoveKind::R3: return d.crossing_count();
    case MoveKind::KirbyDelete: return d.crossing_count() - 1;
    case MoveKind::HandleSlide: {
      std::vector<int> counts(static_cast<std::size_t>(d.component_count()), 1);
      counts[static_cast<std::size_t>(site.component2)] = 2;
      int total = 0;
      for (int id : d.crossing_ids())
        total += counts[static_cast<std::size_t>(d.over(id).component)] * counts[static_cast<std::size_t>(d.under(id).component)];
      return total;
    }
  }
  return d.crossing_count();
}

}  // namespace

Diagram random_walk(const Diagram& d, const std::vector<MoveKind>& kinds, int steps, std::uint64_t seed,
                    int max_crossings, std::vector<MoveSite>* trace) {
  std::mt19937_64 rng(seed);
  Diagram cur = d;
  for (int step = 0; step < steps; ++step) {
    std::vector<MoveSite> sites;
    for (MoveKind k : kinds)
      for (auto& s : enumerate_sites(cur, k))
        if (resulting_crossings(cur, s) <= max_crossings) sites.push_back(s);
    if (sites.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    const MoveSite& site = sites[pick(rng)];
    cur = apply(cur, site);
    if (trace) trace->push_back(site);
  }
  return cur;
}

std::vector<MoveKind> framed_move_kinds() {
  return {MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3};
}

std::vector<MoveKind> kirby_move_kinds() {
  return {MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3, MoveKind::KirbyAdd, MoveKind::KirbyDelete,
          MoveKind::HandleSlide};
}

}  // namespace vkt
