#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vkt {

enum class Role : std::uint8_t { Over, Under };

// One passage of a strand through a classical crossing.
struct CrossingRef {
  int id = 0;
  Role role = Role::Over;
  int sign = 1;  // +1 or -1

  friend auto operator<=>(const CrossingRef&, const CrossingRef&) = default;
};

using Component = std::vector<CrossingRef>;

// Position of a passage: component index and offset inside that component's cyclic sequence.
struct Location {
  int component = -1;
  int index = -1;
};

// A virtual link diagram stored as a signed Gauss code. Virtual crossings carry no data and
// are not represented, so diagrams differing by detour moves compare equal.
//
// Immutable after construction; the constructor validates that every crossing id occurs
// exactly once as Over and once as Under with a common sign.
class Diagram {
 public:
  Diagram() = default;  // empty diagram (no components); bracket unit
  explicit Diagram(std::vector<Component> components, std::string name = {});

  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  int crossing_count() const noexcept { return static_cast<int>(sign_.size()); }
  bool empty() const noexcept { return components_.empty(); }
  const std::string& name() const noexcept { return name_; }
  Diagram with_name(std::string name) const;

  // Crossing ids in increasing order.
  std::vector<int> crossing_ids() const;
  int max_id() const;
  int sign(int id) const;
  Location over(int id) const;
  Location under(int id) const;
  const CrossingRef& at(Location loc) const;

  // Same data, crossing ids renumbered 1..n in order of first appearance.
  Diagram canonical() const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.components_ == b.components_; }

 private:
  std::vector<Component> components_;
  std::string name_;
  std::unordered_map<int, int> sign_;
  std::unordered_map<int, Location> over_, under_;
};

// Extended Gauss code: tokens O<id><sign> / U<id><sign>, components separated by ';',
// whitespace ignored. "" is the 0-crossing unknot.
Diagram parse_gauss(std::string_view text);
std::string to_gauss(const Diagram& d);

// {"name": str, "components": [[{"id": int, "role": "O"|"U", "sign": 1|-1}, ...], ...]}
Diagram parse_json_diagram(std::string_view text);
std::string to_json_string(const Diagram& d, int indent = -1);

// Accepts either codec: text whose first non-space character is '{' is read as JSON.
Diagram parse_diagram(std::string_view text);

int writhe(const Diagram& d);
// Sum of signs of crossings with both passages on component `i` (its blackboard framing).
int self_writhe(const Diagram& d, int i);

// A value in (1/2)Z, stored as twice the value.
struct HalfInteger {
  int twice = 0;
  bool is_integer() const noexcept { return twice % 2 == 0; }
  double value() const noexcept { return twice / 2.0; }
  std::string to_string() const;
  friend bool operator==(HalfInteger, HalfInteger) = default;
};

// Sum of sgn(v)/2 over crossings between components i != j.
HalfInteger linking_number(const Diagram& d, int i, int j);

using LinkingMatrix = std::vector<std::vector<int>>;
// Off-diagonal linking numbers, self-writhes on the diagonal. Raises ValidationError when
// some virtual linking number is a half-integer.
LinkingMatrix linking_matrix(const Diagram& d);

// Blackboard n-cable of every component. Each classical crossing becomes an n x n grid of
// crossings of the same sign; copies are ordered left to right relative to the strand's
// orientation. n = 0 deletes every strand.
Diagram cable(const Diagram& d, int n);
// Per-component strand counts; a count of 0 deletes that component. Copies of component i
// appear consecutively, copy 0 first. Grid crossing (c, j, k) between over-copy j and
// under-copy k gets ids allocated row-major in (original id, j, k).
Diagram cable(const Diagram& d, const std::vector<int>& strands);

// Total genus of the closed oriented surface carrying the diagram: each connected piece of
// the crossing graph, thickened with the rotation fixed by the crossing signs. Crossingless
// components contribute nothing. Zero exactly for diagrams with a planar realization.
int supporting_genus(const Diagram& d);

// Components of `b` follow those of `a`; ids of `b` are shifted past a.max_id().
Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Registry of named example diagrams.
Diagram builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace vkt
