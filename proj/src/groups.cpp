#include "vkt/groups.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "vkt/errors.hpp"

namespace vkt {

namespace {

// Arc bookkeeping: for each component and passage index, the generator of the arc that
// passage lies on; an underpass ends the arc it lies on.
struct Arcs {
  std::vector<std::vector<int>> arc_of;     // [component][passage]
  std::vector<std::vector<int>> after;      // [component][passage]: arc leaving an underpass
  std::vector<int> component_generator;     // generator of underpass-free components, else -1
  int count = 0;
};

Arcs label_arcs(const Diagram& d) {
  Arcs a;
  for (int c = 0; c < d.component_count(); ++c) {
    const Component& comp = d.component(c);
    const int len = static_cast<int>(comp.size());
    std::vector<int> arc(static_cast<std::size_t>(len), -1), after(static_cast<std::size_t>(len), -1);
    std::vector<int> unders;
    for (int k = 0; k < len; ++k)
      if (comp[static_cast<std::size_t>(k)].role == Role::Under) unders.push_back(k);
    if (unders.empty()) {
      const int g = a.count++;
      std::fill(arc.begin(), arc.end(), g);
      a.component_generator.push_back(g);
    } else {
      a.component_generator.push_back(-1);
      for (std::size_t j = 0; j < unders.size(); ++j) after[static_cast<std::size_t>(unders[j])] = a.count++;
      // Passage k lies on the arc started by the last underpass strictly before it (cyclically).
      int current = after[static_cast<std::size_t>(unders.back())];
      for (int k = 0; k < len; ++k) {
        arc[static_cast<std::size_t>(k)] = current;
        if (comp[static_cast<std::size_t>(k)].role == Role::Under) current = after[static_cast<std::size_t>(k)];
      }
    }
    a.arc_of.push_back(std::move(arc));
    a.after.push_back(std::move(after));
  }
  return a;
}

std::string letter_name(int g) { return "x" + std::to_string(g + 1); }

}  // namespace

std::string GroupPresentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += generators.at(static_cast<std::size_t>(l.generator));
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_to_string(relators[i]);
  return out + " >";
}

GroupPresentation wirtinger(const Diagram& d) {
  const Arcs arcs = label_arcs(d);
  GroupPresentation p;
  for (int g = 0; g < arcs.count; ++g) p.generators.push_back(letter_name(g));
  for (int id : d.crossing_ids()) {
    const Location u = d.under(id), o = d.over(id);
    const int x = arcs.arc_of[static_cast<std::size_t>(u.component)][static_cast<std::size_t>(u.index)];
    const int z = arcs.after[static_cast<std::size_t>(u.component)][static_cast<std::size_t>(u.index)];
    const int y = arcs.arc_of[static_cast<std::size_t>(o.component)][static_cast<std::size_t>(o.index)];
    const int e = d.sign(id);
    // z^-1 y^-e x y^e
    p.relators.push_back({{z, -1}, {y, -e}, {x, 1}, {y, e}});
  }
  return p;
}

Word longitude(const Diagram& d, int component) {
  const Arcs arcs = label_arcs(d);
  Word w;
  const Component& comp = d.component(component);
  for (const CrossingRef& ref : comp) {
    if (ref.role != Role::Under) continue;
    const Location o = d.over(ref.id);
    w.push_back({arcs.arc_of[static_cast<std::size_t>(o.component)][static_cast<std::size_t>(o.index)], ref.sign});
  }
  return w;
}

GroupPresentation three_manifold_group(const Diagram& d) {
  GroupPresentation p = wirtinger(d);
  for (int c = 0; c < d.component_count(); ++c) p.relators.push_back(longitude(d, c));
  return p;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (long long t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = p.relators.size(), cols = p.generators.size();
  std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (const Letter& l : p.relators[r]) m[r][static_cast<std::size_t>(l.generator)] += l.power;

  // Smith normal form by repeated pivoting on the smallest nonzero entry.
  std::vector<cpp_int> diag;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) pr = r, pc = c;
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const cpp_int q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const cpp_int q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold in any remaining entry not divisible by the pivot.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m[t][t] == 0) break;
    diag.push_back(abs(m[t][t]));
  }
  AbelianInvariants out;
  out.free_rank = static_cast<int>(cols - diag.size());
  for (const cpp_int& v : diag)
    if (v > 1) out.torsion.push_back(static_cast<long long>(v));
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

long long count_homomorphisms_to_symmetric(const GroupPresentation& p, int n) {
  if (n < 1 || n > 5) throw DomainError("symmetric group degree must be 1..5");
  using Perm = std::vector<int>;
  std::vector<Perm> elems;
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  Perm perm = id;
  do elems.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const std::size_t order = elems.size();
  auto index_of = [&](const Perm& q) {
    return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
  };
  std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> inv(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      Perm q(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = elems[a][static_cast<std::size_t>(elems[b][static_cast<std::size_t>(i)])];
      mul[a][b] = index_of(q);
    }
  }
  const std::size_t e = index_of(id);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (mul[a][b] == e) inv[a] = b;

  const int gens = static_cast<int>(p.generators.size());
  // A relator is checked once its highest generator has been assigned.
  std::vector<std::vector<const Word*>> ready(static_cast<std::size_t>(gens));
  for (const Word& w : p.relators) {
    int top = -1;
    for (const Letter& l : w) top = std::max(top, l.generator);
    if (top < 0) continue;
    ready[static_cast<std::size_t>(top)].push_back(&w);
  }
  std::vector<std::size_t> value(static_cast<std::size_t>(gens), e);
  auto eval = [&](const Word& w) {
    std::size_t acc = e;
    for (const Letter& l : w) {
      const std::size_t g = l.power >= 0 ? value[static_cast<std::size_t>(l.generator)] : inv[value[static_cast<std::size_t>(l.generator)]];
      for (int k = 0; k < std::abs(l.power); ++k) acc = mul[acc][g];
    }
    return acc;
  };
  long long count = 0;
  auto rec = [&](auto&& self, int g) -> void {
    if (g == gens) {
      ++count;
      return;
    }
    for (std::size_t x = 0; x < order; ++x) {
      value[static_cast<std::size_t>(g)] = x;
      bool ok = true;
      for (const Word* w : ready[static_cast<std::size_t>(g)])
        if (eval(*w) != e) { ok = false; break; }
      if (ok) self(self, g + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace vkt
