#include "vkt/nets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vkt/errors.hpp"
#include "vkt/tangle.hpp"

namespace vkt {

int TrivalentNet::add_vertex() {
  rotation_.push_back({-1, -1, -1});
  rotation_set_.push_back(false);
  return vertex_count() - 1;
}

int TrivalentNet::add_edge(int u, int v, int color) {
  if (u == v) throw ValidationError("net edges must join distinct vertices");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw ValidationError("no such vertex");
  if (color < 0) throw ValidationError("edge colors must be >= 0");
  color_.push_back(color);
  ends_.push_back({u, v});
  return edge_count() - 1;
}

void TrivalentNet::set_rotation(int v, std::array<int, 3> edges) {
  for (int e : edges)
    if (e < 0 || e >= edge_count() || (ends_[static_cast<std::size_t>(e)][0] != v && ends_[static_cast<std::size_t>(e)][1] != v))
      throw ValidationError("rotation lists an edge not incident to the vertex");
  rotation_[static_cast<std::size_t>(v)] = edges;
  rotation_set_[static_cast<std::size_t>(v)] = true;
}

void TrivalentNet::set_rotations_from_positions(const std::vector<std::array<double, 2>>& xy) {
  for (int v = 0; v < vertex_count(); ++v) {
    std::vector<std::pair<double, int>> around;
    for (int e = 0; e < edge_count(); ++e) {
      const auto& ends = ends_[static_cast<std::size_t>(e)];
      if (ends[0] != v && ends[1] != v) continue;
      const int w = ends[0] == v ? ends[1] : ends[0];
      const auto& p = xy[static_cast<std::size_t>(v)];
      const auto& q = xy[static_cast<std::size_t>(w)];
      around.emplace_back(std::atan2(q[1] - p[1], q[0] - p[0]), e);
    }
    if (around.size() != 3) throw ValidationError("net vertex is not trivalent");
    std::sort(around.begin(), around.end());
    set_rotation(v, {around[0].second, around[1].second, around[2].second});
  }
}

Complex TrivalentNet::evaluate(const RootParams& ctx) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (!rotation_set_[static_cast<std::size_t>(v)]) throw ValidationError("net vertex without rotation");

  // Strand end (edge e, side s, position k) gets id offset[e] + s*color + k, with positions
  // counted counter-clockwise around the vertex at that side.
  std::vector<int> offset(static_cast<std::size_t>(edge_count()) + 1, 0);
  for (int e = 0; e < edge_count(); ++e)
    offset[static_cast<std::size_t>(e) + 1] = offset[static_cast<std::size_t>(e)] + 2 * color_[static_cast<std::size_t>(e)];
  const int points = offset.back();
  auto point = [&](int e, int side, int k) { return offset[static_cast<std::size_t>(e)] + side * color_[static_cast<std::size_t>(e)] + k; };

  std::vector<std::pair<int, int>> fixed;
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& rot = rotation_[static_cast<std::size_t>(v)];
    std::array<int, 3> c{}, side{};
    for (int t = 0; t < 3; ++t) {
      const int e = rot[static_cast<std::size_t>(t)];
      c[static_cast<std::size_t>(t)] = color_[static_cast<std::size_t>(e)];
      side[static_cast<std::size_t>(t)] = ends_[static_cast<std::size_t>(e)][0] == v ? 0 : 1;
    }
    for (int t = 0; t < 3; ++t) {
      const int t2 = (t + 1) % 3, t3 = (t + 2) % 3;
      const int twice = c[static_cast<std::size_t>(t)] + c[static_cast<std::size_t>(t2)] - c[static_cast<std::size_t>(t3)];
      if (twice < 0 || twice % 2 != 0) return Complex(0.0);
      const int k = twice / 2;
      // Last k strands of this end pair, nested, with the first k of the next end.
      for (int s = 0; s < k; ++s)
        fixed.emplace_back(point(rot[static_cast<std::size_t>(t)], side[static_cast<std::size_t>(t)], c[static_cast<std::size_t>(t)] - 1 - s),
                           point(rot[static_cast<std::size_t>(t2)], side[static_cast<std::size_t>(t2)], s));
    }
  }

  std::vector<std::vector<std::pair<BrauerDiagram, Complex>>> proj;
  for (int e = 0; e < edge_count(); ++e) {
    const auto t = jw(color_[static_cast<std::size_t>(e)], ctx);
    proj.emplace_back(t.terms().begin(), t.terms().end());
  }

  Complex total(0.0);
  std::vector<std::size_t> pick(proj.size(), 0);
  std::vector<int> parent(static_cast<std::size_t>(points));
  for (;;) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = points;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<std::size_t>(a)] = b, --comps;
    };
    for (auto [a, b] : fixed) unite(a, b);
    Complex coeff(1.0);
    for (int e = 0; e < edge_count(); ++e) {
      const int n = color_[static_cast<std::size_t>(e)];
      const auto& [m, c] = proj[static_cast<std::size_t>(e)][pick[static_cast<std::size_t>(e)]];
      coeff *= c;
      // Bottom point i is side-0 position i; top point i is the same strand seen from side 1,
      // where counter-clockwise positions run the other way.
      auto at = [&](int p) { return p < n ? point(e, 1, n - 1 - p) : point(e, 0, p - n); };
      for (int p = 0; p < 2 * n; ++p)
        if (p < m.mate(p)) unite(at(p), at(m.mate(p)));
    }
    // Every point lies on a loop; each loop has an even number of points, all united.
    total += coeff * std::pow(ctx.d, comps);
    std::size_t s = 0;
    while (s < proj.size() && ++pick[s] == proj[s].size()) pick[s++] = 0;
    if (s == proj.size()) break;
  }
  return total;
}

TrivalentNet theta_net(int a, int b, int c) {
  TrivalentNet net;
  const int u = net.add_vertex(), v = net.add_vertex();
  const int ea = net.add_edge(u, v, a), eb = net.add_edge(u, v, b), ec = net.add_edge(u, v, c);
  net.set_rotation(u, {ea, eb, ec});
  net.set_rotation(v, {ea, ec, eb});
  return net;
}

TrivalentNet tet_net(int a, int b, int e, int c, int d, int f) {
  TrivalentNet net;
  const int p = net.add_vertex(), q = net.add_vertex(), r = net.add_vertex(), s = net.add_vertex();
  net.add_edge(p, r, a);
  net.add_edge(q, r, b);
  net.add_edge(q, s, c);
  net.add_edge(p, s, d);
  net.add_edge(p, q, e);
  net.add_edge(r, s, f);
  // Outer triangle p, r, s with q in the middle.
  net.set_rotations_from_positions({{0.0, 1.0}, {0.0, 0.0}, {-1.0, -1.0}, {1.0, -1.0}});
  return net;
}

TrivalentNet beaded_theta_net(int a, int b, int c, int y, int z) {
  TrivalentNet net;
  const int left = net.add_vertex(), right = net.add_vertex();
  const int b0 = net.add_vertex(), b1 = net.add_vertex();
  const int ey = net.add_edge(left, right, y);
  const int ez = net.add_edge(left, right, z);
  const int c1 = net.add_edge(left, b0, c);
  const int ea = net.add_edge(b0, b1, a);
  const int eb = net.add_edge(b0, b1, b);
  const int c2 = net.add_edge(b1, right, c);
  // y on top, z below, the beaded c edge along the middle with a above b.
  net.set_rotation(left, {ez, c1, ey});
  net.set_rotation(right, {ey, c2, ez});
  net.set_rotation(b0, {eb, ea, c1});
  net.set_rotation(b1, {c2, ea, eb});
  return net;
}

}  // namespace vkt
