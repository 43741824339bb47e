#pragma once

#include <array>
#include <vector>

#include "vkt/roots.hpp"

namespace vkt {

// Planar trivalent graph with colored edges, evaluated by inserting a Jones-Wenzl projector
// on every edge and summing loop values over all projector terms. Used as an independent
// check of the closed-form recoupling evaluations.
class TrivalentNet {
 public:
  int add_vertex();
  int add_edge(int u, int v, int color);
  // Incident edges of `v` in counter-clockwise order. Each edge must join distinct vertices.
  void set_rotation(int v, std::array<int, 3> edges);
  // Rotation of every vertex from straight-line positions (no multi-edges allowed).
  void set_rotations_from_positions(const std::vector<std::array<double, 2>>& xy);

  int vertex_count() const noexcept { return static_cast<int>(rotation_.size()); }
  int edge_count() const noexcept { return static_cast<int>(color_.size()); }

  // Unreduced evaluation at A = exp(i pi / 2r); zero if some vertex is not admissible.
  Complex evaluate(const RootParams& ctx) const;

 private:
  std::vector<int> color_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::array<int, 3>> rotation_;
  std::vector<bool> rotation_set_;
};

TrivalentNet theta_net(int a, int b, int c);
// Vertices (a,d,e), (b,c,e), (a,b,f), (c,d,f).
TrivalentNet tet_net(int a, int b, int e, int c, int d, int f);
// theta(c, y, z) with a bubble (a, b) inserted on the c edge.
TrivalentNet beaded_theta_net(int a, int b, int c, int y, int z);

}  // namespace vkt
