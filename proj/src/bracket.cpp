#include "vkt/bracket.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "vkt/errors.hpp"

namespace vkt {

int StateNetwork::add_crossing(int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("crossing sign must be +1 or -1");
  signs_.push_back(sign);
  resolved_ = false;
  return crossing_count() - 1;
}

int StateNetwork::add_terminal() {
  resolved_ = false;
  return -1 - terminals_++;
}

void StateNetwork::connect(int a, int b) {
  edges_.emplace_back(a, b);
  resolved_ = false;
}

void StateNetwork::resolve() {
  if (resolved_) return;
  const int nh = 4 * crossing_count();
  auto slot = [&](int node) { return node >= 0 ? node : nh + (-1 - node); };
  const int nodes = nh + terminals_;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nodes));
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    incident[static_cast<std::size_t>(slot(edges_[static_cast<std::size_t>(e)].first))].push_back(e);
    incident[static_cast<std::size_t>(slot(edges_[static_cast<std::size_t>(e)].second))].push_back(e);
  }
  for (int n = 0; n < nodes; ++n) {
    const std::size_t want = n < nh ? 1 : 2;
    if (incident[static_cast<std::size_t>(n)].size() != want)
      throw std::logic_error("state network: node with wrong degree");
  }
  auto other = [&](int e, int node) {
    const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
    return u == node ? v : u;
  };
  std::vector<bool> seen_edge(edges_.size(), false);
  free_loops_ = explicit_loops_;
  partner_.assign(static_cast<std::size_t>(nh), -1);
  for (int h = 0; h < nh; ++h) {
    if (partner_[static_cast<std::size_t>(h)] >= 0) continue;
    int e = incident[static_cast<std::size_t>(h)][0];
    int node = h;
    for (;;) {
      seen_edge[static_cast<std::size_t>(e)] = true;
      const int next = other(e, node);
      if (next >= 0) {
        partner_[static_cast<std::size_t>(h)] = next;
        partner_[static_cast<std::size_t>(next)] = h;
        break;
      }
      const auto& inc = incident[static_cast<std::size_t>(slot(next))];
      // A terminal wired to itself has both incident slots equal to e.
      const int e2 = inc[0] == e ? inc[1] : inc[0];
      node = next;
      e = e2;
    }
  }
  // Remaining edges lie on closed chains of terminals.
  for (std::size_t e0 = 0; e0 < edges_.size(); ++e0) {
    if (seen_edge[e0]) continue;
    ++free_loops_;
    int e = static_cast<int>(e0);
    int node = edges_[e0].first;
    while (!seen_edge[static_cast<std::size_t>(e)]) {
      seen_edge[static_cast<std::size_t>(e)] = true;
      node = other(e, node);
      const auto& inc = incident[static_cast<std::size_t>(slot(node))];
      e = inc[0] == e ? inc[1] : inc[0];
    }
  }
  resolved_ = true;
}

StateNetwork network_from_diagram(const Diagram& d, const std::vector<bool>& cut,
                                  std::vector<CutTerminals>* terminals) {
  StateNetwork net;
  std::unordered_map<int, int> index;
  for (int id : d.crossing_ids()) index[id] = net.add_crossing(d.sign(id));
  if (terminals && static_cast<int>(terminals->size()) < d.component_count())
    terminals->resize(static_cast<std::size_t>(d.component_count()));
  for (int i = 0; i < d.component_count(); ++i) {
    const bool is_cut = i < static_cast<int>(cut.size()) && cut[static_cast<std::size_t>(i)];
    const Component& comp = d.component(i);
    CutTerminals t;
    if (is_cut) {
      t.arrive = net.add_terminal();
      t.depart = net.add_terminal();
      if (terminals) (*terminals)[static_cast<std::size_t>(i)] = t;
    }
    if (comp.empty()) {
      if (is_cut) net.connect(t.depart, t.arrive);
      else net.add_free_loop();
      continue;
    }
    auto in_of = [&](const CrossingRef& p) {
      return StateNetwork::half_edge(index.at(p.id), p.role == Role::Over ? StateNetwork::kOverIn
                                                                          : StateNetwork::kUnderIn);
    };
    auto out_of = [&](const CrossingRef& p) {
      return StateNetwork::half_edge(index.at(p.id), p.role == Role::Over ? StateNetwork::kOverOut
                                                                          : StateNetwork::kUnderOut);
    };
    for (std::size_t k = 0; k + 1 < comp.size(); ++k) net.connect(out_of(comp[k]), in_of(comp[k + 1]));
    if (is_cut) {
      net.connect(out_of(comp.back()), t.arrive);
      net.connect(t.depart, in_of(comp.front()));
    } else {
      net.connect(out_of(comp.back()), in_of(comp.front()));
    }
  }
  if (std::find(cut.begin(), cut.end(), true) == cut.end()) net.resolve();
  return net;
}

namespace {

using Pairing = std::array<std::pair<int, int>, 2>;

// Local pairings of the four half-edges (offsets 0..3) for the A- and A^-1-smoothings.
Pairing smoothing_pairs(int sign, Smoothing s) {
  static constexpr Pairing oriented{{{StateNetwork::kOverIn, StateNetwork::kUnderOut},
                                     {StateNetwork::kUnderIn, StateNetwork::kOverOut}}};
  static constexpr Pairing unoriented{{{StateNetwork::kOverIn, StateNetwork::kUnderIn},
                                       {StateNetwork::kOverOut, StateNetwork::kUnderOut}}};
  const bool alpha = s == Smoothing::Alpha;
  return (alpha == (sign > 0)) ? oriented : unoriented;
}

std::array<int, 4> smoothing_map(int sign, Smoothing s) {
  std::array<int, 4> m{};
  for (auto [x, y] : smoothing_pairs(sign, s)) {
    m[static_cast<std::size_t>(x)] = y;
    m[static_cast<std::size_t>(y)] = x;
  }
  return m;
}

// Greedy order: next crossing is the one with most half-edges already attached to
// processed crossings, ties broken by index.
std::vector<int> contraction_order(const StateNetwork& net) {
  const int n = net.crossing_count();
  const auto& partner = net.partner();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[static_cast<std::size_t>(c)]) continue;
      int score = 0;
      for (int k = 0; k < 4; ++k) {
        const int p = partner[static_cast<std::size_t>(4 * c + k)] / 4;
        if (p != c && done[static_cast<std::size_t>(p)]) ++score;
      }
      if (score > best_score) best = c, best_score = score;
    }
    done[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  return order;
}

// Open half-edges and their current path mates: flat (h, mate) pairs sorted by h, both
// directions stored, followed by the reduced-normalization flag.
using StateKey = std::vector<int>;

int lookup_mate(const StateKey& key, int h) {
  const std::size_t pairs = (key.size() - 1) / 2;
  std::size_t lo = 0, hi = pairs;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (key[2 * mid] < h) lo = mid + 1;
    else hi = mid;
  }
  if (lo < pairs && key[2 * lo] == h) return key[2 * lo + 1];
  return -1;
}

}  // namespace

template <class V>
V state_sum(StateNetwork net, const BracketWeights<V>& w, bool reduced) {
  net.resolve();
  check_budget(net.crossing_count());
  const auto& partner = net.partner();

  V start = w.one;
  bool start_flag = false;
  for (int i = 0; i < net.free_loops(); ++i) {
    if (reduced && !start_flag) start_flag = true;
    else start = start * w.d;
  }
  std::map<StateKey, V> states;
  states.emplace(StateKey{start_flag ? 1 : 0}, start);

  for (int c : contraction_order(net)) {
    const int sign = net.sign(c);
    std::map<StateKey, V> next;
    for (const auto& [key, value] : states) {
      // Where each half-edge of c leads: the far end of its open path, or its arc partner.
      std::array<int, 4> link{};
      for (int k = 0; k < 4; ++k) {
        const int h = 4 * c + k;
        const int m = lookup_mate(key, h);
        link[static_cast<std::size_t>(k)] = m >= 0 ? m : partner[static_cast<std::size_t>(h)];
      }
      auto local = [&](int x) { return x / 4 == c ? x % 4 : -1; };
      for (Smoothing s : {Smoothing::Alpha, Smoothing::Beta}) {
        const auto sm = smoothing_map(sign, s);
        std::array<bool, 4> visited{};
        std::vector<std::pair<int, int>> joined;
        for (int k = 0; k < 4; ++k) {
          const int x = link[static_cast<std::size_t>(k)];
          if (local(x) >= 0 || visited[static_cast<std::size_t>(k)]) continue;
          int cur = k;
          for (;;) {
            visited[static_cast<std::size_t>(cur)] = true;
            const int across = sm[static_cast<std::size_t>(cur)];
            visited[static_cast<std::size_t>(across)] = true;
            const int y = link[static_cast<std::size_t>(across)];
            if (local(y) < 0) {
              joined.emplace_back(x, y);
              break;
            }
            cur = local(y);
          }
        }
        int cycles = 0;
        for (int k = 0; k < 4; ++k) {
          if (visited[static_cast<std::size_t>(k)]) continue;
          ++cycles;
          int cur = k;
          while (!visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = true;
            const int across = sm[static_cast<std::size_t>(cur)];
            visited[static_cast<std::size_t>(across)] = true;
            cur = local(link[static_cast<std::size_t>(across)]);
          }
        }

        std::vector<std::pair<int, int>> entries;
        entries.reserve((key.size() - 1) / 2 + 2 * joined.size());
        for (std::size_t i = 0; 2 * i + 1 < key.size(); ++i) {
          const int h = key[2 * i], m = key[2 * i + 1];
          if (h / 4 == c || m / 4 == c) continue;
          entries.emplace_back(h, m);
        }
        for (auto [x, y] : joined) {
          entries.emplace_back(x, y);
          entries.emplace_back(y, x);
        }
        std::sort(entries.begin(), entries.end());
        bool flag = key.back() != 0;
        V weight = s == Smoothing::Alpha ? w.a : w.a_inv;
        for (int i = 0; i < cycles; ++i) {
          if (reduced && !flag) flag = true;
          else weight = weight * w.d;
        }
        StateKey nk;
        nk.reserve(2 * entries.size() + 1);
        for (auto [h, m] : entries) {
          nk.push_back(h);
          nk.push_back(m);
        }
        nk.push_back(flag ? 1 : 0);
        auto it = next.find(nk);
        if (it == next.end()) next.emplace(std::move(nk), value * weight);
        else it->second = it->second + value * weight;
      }
    }
    states = std::move(next);
  }
  V total = w.one - w.one;
  for (const auto& [key, value] : states) total = total + value;
  return total;
}

template LaurentPoly state_sum<LaurentPoly>(StateNetwork, const BracketWeights<LaurentPoly>&, bool);
template Complex state_sum<Complex>(StateNetwork, const BracketWeights<Complex>&, bool);

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

int count_loops(const StateNetwork& net, const std::vector<Smoothing>& state) {
  const int nh = 4 * net.crossing_count();
  std::vector<int> parent(static_cast<std::size_t>(nh));
  std::iota(parent.begin(), parent.end(), 0);
  int components = nh;
  auto unite = [&](int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b, --components;
  };
  for (int h = 0; h < nh; ++h) unite(h, net.partner()[static_cast<std::size_t>(h)]);
  for (int c = 0; c < net.crossing_count(); ++c)
    for (auto [x, y] : smoothing_pairs(net.sign(c), state[static_cast<std::size_t>(c)]))
      unite(4 * c + x, 4 * c + y);
  return components + net.free_loops();
}

}  // namespace

LaurentPoly state_sum_by_enumeration(StateNetwork net, bool reduced) {
  net.resolve();
  const int n = net.crossing_count();
  if (n > 24) throw BudgetError("enumeration oracle limited to 24 crossings");
  LaurentPoly total;
  const LaurentPoly d = LaurentPoly::loop();
  std::vector<Smoothing> state(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int alphas = 0;
    for (int c = 0; c < n; ++c) {
      const bool alpha = ((mask >> c) & 1U) == 0;
      state[static_cast<std::size_t>(c)] = alpha ? Smoothing::Alpha : Smoothing::Beta;
      alphas += alpha ? 1 : 0;
    }
    int l = count_loops(net, state);
    if (reduced && l > 0) --l;
    total += LaurentPoly::monomial(2 * alphas - n) * d.pow(static_cast<unsigned>(l));
  }
  return total;
}

int crossing_budget() {
  if (const char* env = std::getenv("VKT_CROSSING_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
  }
  return 36;
}

void check_budget(int crossings) {
  const int budget = crossing_budget();
  if (crossings > budget)
    throw BudgetError("diagram has " + std::to_string(crossings) + " classical crossings, budget is " +
                      std::to_string(budget));
}

int loops(const Diagram& d, const std::vector<Smoothing>& state) {
  if (static_cast<int>(state.size()) != d.crossing_count())
    throw ValidationError("state length does not match crossing count");
  return count_loops(network_from_diagram(d), state);
}

BracketWeights<LaurentPoly> generic_weights() {
  return {LaurentPoly(1), LaurentPoly::A(), LaurentPoly::A_inv(), LaurentPoly::loop()};
}

BracketWeights<Complex> complex_weights(const RootParams& ctx) {
  return {Complex(1.0, 0.0), ctx.A, 1.0 / ctx.A, ctx.d};
}

LaurentPoly bracket_reduced(const Diagram& d) { return state_sum(network_from_diagram(d), generic_weights(), true); }
LaurentPoly bracket_unreduced(const Diagram& d) {
  return state_sum(network_from_diagram(d), generic_weights(), false);
}
Complex bracket_reduced(const Diagram& d, const RootParams& ctx) {
  return state_sum(network_from_diagram(d), complex_weights(ctx), true);
}
Complex bracket_unreduced(const Diagram& d, const RootParams& ctx) {
  return state_sum(network_from_diagram(d), complex_weights(ctx), false);
}

LaurentPoly f_poly(const Diagram& d) {
  const int w = writhe(d);
  LaurentPoly f = bracket_reduced(d).shifted(-3 * w);
  if (w % 2 != 0) f *= -1;
  return f;
}

JonesPoly jones(const Diagram& d) { return {f_poly(d).substitute_power(-1)}; }

std::string JonesPoly::to_string() const {
  if (in_quarter_t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = in_quarter_t.terms().rbegin(); it != in_quarter_t.terms().rend(); ++it) {
    const auto [e, c] = *it;
    const LaurentPoly::Coeff mag = c < 0 ? -c : c;
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string power;
    if (e != 0) {
      if (e == 4) power = "t";
      else if (e % 4 == 0) power = "t^" + std::to_string(e / 4);
      else if (e % 2 == 0) power = "t^(" + std::to_string(e / 2) + "/2)";
      else power = "t^(" + std::to_string(e) + "/4)";
    }
    if (power.empty()) out += std::to_string(mag);
    else out += (mag == 1 ? "" : std::to_string(mag)) + power;
  }
  return out;
}

}  // namespace vkt
