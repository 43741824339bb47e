#pragma once

#include <algorithm>
#include <random>

#include "vkt/diagram.hpp"

namespace testing_support {

// Random signed Gauss code with `crossings` crossings spread over `components` components
// (every component gets at least one passage when possible). Any such code is a valid
// virtual diagram.
inline vkt::Diagram random_diagram(std::mt19937_64& rng, int crossings, int components) {
  std::vector<vkt::CrossingRef> passages;
  for (int id = 1; id <= crossings; ++id) {
    const int sign = (rng() & 1) ? 1 : -1;
    passages.push_back({id, vkt::Role::Over, sign});
    passages.push_back({id, vkt::Role::Under, sign});
  }
  std::shuffle(passages.begin(), passages.end(), rng);
  std::vector<vkt::Component> comps(static_cast<std::size_t>(components));
  for (std::size_t i = 0; i < passages.size(); ++i) {
    const std::size_t c = i < comps.size() ? i : rng() % comps.size();
    comps[c].push_back(passages[i]);
  }
  return vkt::Diagram(std::move(comps));
}

// Every crossing switched: over and under exchanged, signs negated.
inline vkt::Diagram mirror(const vkt::Diagram& d) {
  auto comps = d.components();
  for (auto& comp : comps)
    for (auto& ref : comp) {
      ref.role = ref.role == vkt::Role::Over ? vkt::Role::Under : vkt::Role::Over;
      ref.sign = -ref.sign;
    }
  return vkt::Diagram(std::move(comps));
}

}  // namespace testing_support
