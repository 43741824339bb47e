#include "vkt/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

#include "vkt/errors.hpp"

namespace vkt {

Diagram::Diagram(std::vector<Component> components, std::string name)
    : components_(std::move(components)), name_(std::move(name)) {
  for (int c = 0; c < component_count(); ++c) {
    const Component& comp = components_[static_cast<std::size_t>(c)];
    for (int k = 0; k < static_cast<int>(comp.size()); ++k) {
      const CrossingRef& ref = comp[static_cast<std::size_t>(k)];
      if (ref.id <= 0) throw ValidationError("crossing ids must be positive, got " + std::to_string(ref.id));
      if (ref.sign != 1 && ref.sign != -1)
        throw ValidationError("crossing " + std::to_string(ref.id) + " has sign other than +1/-1");
      auto& slot = ref.role == Role::Over ? over_ : under_;
      if (!slot.emplace(ref.id, Location{c, k}).second)
        throw ValidationError("crossing " + std::to_string(ref.id) + " appears twice as " +
                              (ref.role == Role::Over ? "over" : "under"));
      auto [it, fresh] = sign_.emplace(ref.id, ref.sign);
      if (!fresh && it->second != ref.sign)
        throw ValidationError("crossing " + std::to_string(ref.id) + " has mismatched signs");
    }
  }
  for (auto [id, s] : sign_) {
    if (!over_.count(id) || !under_.count(id))
      throw ValidationError("crossing " + std::to_string(id) + " lacks an " + (over_.count(id) ? "under" : "over") +
                            " passage");
  }
}

Diagram Diagram::with_name(std::string name) const {
  Diagram copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<int> Diagram::crossing_ids() const {
  std::vector<int> ids;
  ids.reserve(sign_.size());
  for (auto [id, s] : sign_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

int Diagram::max_id() const {
  int m = 0;
  for (auto [id, s] : sign_) m = std::max(m, id);
  return m;
}

int Diagram::sign(int id) const {
  auto it = sign_.find(id);
  if (it == sign_.end()) throw ValidationError("no crossing with id " + std::to_string(id));
  return it->second;
}

Location Diagram::over(int id) const {
  auto it = over_.find(id);
  if (it == over_.end()) throw ValidationError("no crossing with id " + std::to_string(id));
  return it->second;
}

Location Diagram::under(int id) const {
  auto it = under_.find(id);
  if (it == under_.end()) throw ValidationError("no crossing with id " + std::to_string(id));
  return it->second;
}

const CrossingRef& Diagram::at(Location loc) const {
  return components_.at(static_cast<std::size_t>(loc.component)).at(static_cast<std::size_t>(loc.index));
}

Diagram Diagram::canonical() const {
  std::map<int, int> remap;
  std::vector<Component> comps = components_;
  for (auto& comp : comps)
    for (auto& ref : comp) {
      auto [it, fresh] = remap.emplace(ref.id, static_cast<int>(remap.size()) + 1);
      ref.id = it->second;
    }
  return Diagram(std::move(comps), name_);
}

// ---- Gauss code -------------------------------------------------------------------------

Diagram parse_gauss(std::string_view text) {
  std::vector<Component> comps(1);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char ch = text[i];
    if (ch == ';') {
      comps.emplace_back();
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U' && ch != 'o' && ch != 'u')
      throw ParseError(std::string("expected 'O', 'U' or ';', found '") + ch + "'", i);
    CrossingRef ref;
    ref.role = (ch == 'O' || ch == 'o') ? Role::Over : Role::Under;
    ++i;
    skip_ws();
    std::size_t digits_at = i;
    long long id = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      id = id * 10 + (text[i] - '0');
      if (id > 1'000'000'000) throw ParseError("crossing id too large", digits_at);
      ++i;
    }
    if (i == digits_at) throw ParseError("expected crossing id", i);
    if (id == 0) throw ParseError("crossing ids must be positive", digits_at);
    ref.id = static_cast<int>(id);
    skip_ws();
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) throw ParseError("expected sign '+' or '-'", i);
    ref.sign = text[i] == '+' ? 1 : -1;
    ++i;
    comps.back().push_back(ref);
  }
  return Diagram(std::move(comps));
}

std::string to_gauss(const Diagram& d) {
  if (d.empty()) throw ValidationError("the empty diagram has no Gauss code");
  std::string out;
  for (int c = 0; c < d.component_count(); ++c) {
    if (c) out += ';';
    for (const auto& ref : d.component(c)) {
      out += ref.role == Role::Over ? 'O' : 'U';
      out += std::to_string(ref.id);
      out += ref.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

// ---- JSON -------------------------------------------------------------------------------

Diagram parse_json_diagram(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw ParseError("JSON diagram needs a \"components\" array", 0);
  std::vector<Component> comps;
  try {
    for (const auto& jc : j["components"]) {
      Component comp;
      for (const auto& jr : jc) {
        CrossingRef ref;
        ref.id = jr.at("id").get<int>();
        std::string role = jr.at("role").get<std::string>();
        if (role != "O" && role != "U") throw ParseError("role must be \"O\" or \"U\"", 0);
        ref.role = role == "O" ? Role::Over : Role::Under;
        ref.sign = jr.at("sign").get<int>();
        comp.push_back(ref);
      }
      comps.push_back(std::move(comp));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON diagram: ") + e.what(), 0);
  }
  std::string name = j.value("name", std::string{});
  return Diagram(std::move(comps), std::move(name));
}

std::string to_json_string(const Diagram& d, int indent) {
  nlohmann::json j;
  j["name"] = d.name();
  j["components"] = nlohmann::json::array();
  for (const auto& comp : d.components()) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& ref : comp)
      jc.push_back({{"id", ref.id}, {"role", ref.role == Role::Over ? "O" : "U"}, {"sign", ref.sign}});
    j["components"].push_back(std::move(jc));
  }
  return j.dump(indent);
}

Diagram parse_diagram(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') return parse_json_diagram(text);
  return parse_gauss(text);
}

// ---- measures ---------------------------------------------------------------------------

int writhe(const Diagram& d) {
  int w = 0;
  for (int id : d.crossing_ids()) w += d.sign(id);
  return w;
}

int self_writhe(const Diagram& d, int i) {
  if (i < 0 || i >= d.component_count()) throw ValidationError("component index out of range");
  int w = 0;
  for (const auto& ref : d.component(i))
    if (ref.role == Role::Over && d.under(ref.id).component == i) w += ref.sign;
  return w;
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInteger linking_number(const Diagram& d, int i, int j) {
  const int n = d.component_count();
  if (i < 0 || j < 0 || i >= n || j >= n) throw ValidationError("component index out of range");
  if (i == j) throw ValidationError("linking number needs two distinct components");
  HalfInteger lk;
  for (int id : d.crossing_ids()) {
    int a = d.over(id).component, b = d.under(id).component;
    if ((a == i && b == j) || (a == j && b == i)) lk.twice += d.sign(id);
  }
  return lk;
}

LinkingMatrix linking_matrix(const Diagram& d) {
  const int n = d.component_count();
  LinkingMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = self_writhe(d, i);
    for (int j = i + 1; j < n; ++j) {
      HalfInteger lk = linking_number(d, i, j);
      if (!lk.is_integer())
        throw ValidationError("linking number of components " + std::to_string(i) + " and " + std::to_string(j) +
                              " is " + lk.to_string() + "; the linking matrix needs integers");
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lk.twice / 2;
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = lk.twice / 2;
    }
  }
  return m;
}

// ---- cabling ----------------------------------------------------------------------------

Diagram cable(const Diagram& d, int n) {
  if (n < 0) throw ValidationError("cable strand count must be >= 0");
  return cable(d, std::vector<int>(static_cast<std::size_t>(d.component_count()), n));
}

Diagram cable(const Diagram& d, const std::vector<int>& strands) {
  if (static_cast<int>(strands.size()) != d.component_count())
    throw ValidationError("cable needs one strand count per component");
  for (int s : strands)
    if (s < 0) throw ValidationError("cable strand count must be >= 0");
  auto count = [&](int comp) { return strands[static_cast<std::size_t>(comp)]; };

  // Grid id base per original crossing, row-major over (over-copy j, under-copy k).
  std::unordered_map<int, int> base;
  int next = 1;
  for (int id : d.crossing_ids()) {
    base[id] = next;
    next += count(d.over(id).component) * count(d.under(id).component);
  }

  std::vector<Component> out;
  for (int c = 0; c < d.component_count(); ++c) {
    const int copies = count(c);
    for (int j = 0; j < copies; ++j) {
      Component seq;
      for (const auto& ref : d.component(c)) {
        if (ref.role == Role::Over) {
          const int other = count(d.under(ref.id).component);
          for (int t = 0; t < other; ++t) {
            int k = ref.sign > 0 ? t : other - 1 - t;
            seq.push_back({base[ref.id] + j * other + k, Role::Over, ref.sign});
          }
        } else {
          const int other = count(d.over(ref.id).component);
          for (int t = 0; t < other; ++t) {
            int jj = ref.sign > 0 ? other - 1 - t : t;
            seq.push_back({base[ref.id] + jj * copies + j, Role::Under, ref.sign});
          }
        }
      }
      out.push_back(std::move(seq));
    }
  }
  return Diagram(std::move(out), d.name());
}

int supporting_genus(const Diagram& d) {
  const auto ids = d.crossing_ids();
  const int c = static_cast<int>(ids.size());
  if (c == 0) return 0;
  std::map<int, int> index;
  for (int i = 0; i < c; ++i) index[ids[static_cast<std::size_t>(i)]] = i;
  // Half-edge 4i + {0 over in, 1 over out, 2 under in, 3 under out}.
  std::vector<int> edge(static_cast<std::size_t>(4 * c)), turn(static_cast<std::size_t>(4 * c));
  for (const Component& comp : d.components()) {
    const std::size_t n = comp.size();
    for (std::size_t k = 0; k < n; ++k) {
      const CrossingRef& from = comp[k];
      const CrossingRef& to = comp[(k + 1) % n];
      const int out = 4 * index[from.id] + (from.role == Role::Over ? 1 : 3);
      const int in = 4 * index[to.id] + (to.role == Role::Over ? 0 : 2);
      edge[static_cast<std::size_t>(out)] = in;
      edge[static_cast<std::size_t>(in)] = out;
    }
  }
  // Counter-clockwise order around the crossing, starting from the outgoing over strand.
  static constexpr int kPositive[4] = {1, 3, 0, 2};
  static constexpr int kNegative[4] = {1, 2, 0, 3};
  for (int i = 0; i < c; ++i) {
    const int* order = d.sign(ids[static_cast<std::size_t>(i)]) > 0 ? kPositive : kNegative;
    for (int k = 0; k < 4; ++k) turn[static_cast<std::size_t>(4 * i + order[k])] = 4 * i + order[(k + 1) % 4];
  }
  std::vector<int> root(static_cast<std::size_t>(4 * c));
  for (int h = 0; h < 4 * c; ++h) root[static_cast<std::size_t>(h)] = h;
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int h = 0; h < 4 * c; ++h) {
    root[static_cast<std::size_t>(find(h))] = find(edge[static_cast<std::size_t>(h)]);
    root[static_cast<std::size_t>(find(h))] = find(turn[static_cast<std::size_t>(h)]);
  }
  int pieces = 0;
  for (int h = 0; h < 4 * c; ++h)
    if (find(h) == h) ++pieces;
  std::vector<bool> seen(static_cast<std::size_t>(4 * c), false);
  int faces = 0;
  for (int h = 0; h < 4 * c; ++h) {
    if (seen[static_cast<std::size_t>(h)]) continue;
    ++faces;
    for (int x = h; !seen[static_cast<std::size_t>(x)]; x = turn[static_cast<std::size_t>(edge[static_cast<std::size_t>(x)])])
      seen[static_cast<std::size_t>(x)] = true;
  }
  // Each piece is a sphere with handles: V - E + F = 2 pieces - 2 genus, with E = 2V.
  return (2 * pieces + c - faces) / 2;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  std::vector<Component> comps = a.components();
  const int shift = a.max_id();
  for (Component comp : b.components()) {
    for (auto& ref : comp) ref.id += shift;
    comps.push_back(std::move(comp));
  }
  std::string name;
  if (!a.name().empty() || !b.name().empty()) name = a.name() + "+" + b.name();
  return Diagram(std::move(comps), std::move(name));
}

}  // namespace vkt
