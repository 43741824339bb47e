#include <numeric>

#include "vkt/bracket.hpp"
#include "vkt/errors.hpp"
#include "vkt/tangle.hpp"

namespace vkt {

namespace {

template <class C, class Projector, class Evaluate>
C splice(const Diagram& d, const std::vector<int>& colors, Projector projector, Evaluate evaluate) {
  if (static_cast<int>(colors.size()) != d.component_count())
    throw ValidationError("need one color per component");
  for (int a : colors)
    if (a < 0) throw DomainError("colors must be >= 0");

  const Diagram cabled = cable(d, colors);
  check_budget(cabled.crossing_count());
  std::vector<CutTerminals> ends;
  const StateNetwork base =
      network_from_diagram(cabled, std::vector<bool>(static_cast<std::size_t>(cabled.component_count()), true), &ends);

  struct Slot {
    int offset;
    int strands;
    std::vector<std::pair<BrauerDiagram, C>> terms;
  };
  std::vector<Slot> slots;
  int offset = 0;
  for (int a : colors) {
    if (a > 0) {
      const auto t = projector(a);
      slots.push_back({offset, a, {t.terms().begin(), t.terms().end()}});
    }
    offset += a;
  }

  C total{};
  std::vector<std::size_t> pick(slots.size(), 0);
  for (;;) {
    StateNetwork net = base;
    C coeff(1);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const Slot& slot = slots[s];
      const auto& [matching, c] = slot.terms[pick[s]];
      coeff = coeff * c;
      // Top point j leaves toward copy j's departing end, bottom point j receives its arrival.
      auto terminal = [&](int p) {
        const auto& e = ends[static_cast<std::size_t>(slot.offset + (p < slot.strands ? p : p - slot.strands))];
        return p < slot.strands ? e.depart : e.arrive;
      };
      for (int p = 0; p < 2 * slot.strands; ++p)
        if (p < matching.mate(p)) net.connect(terminal(p), terminal(matching.mate(p)));
    }
    total = total + coeff * evaluate(std::move(net));

    std::size_t s = 0;
    while (s < slots.size() && ++pick[s] == slots[s].terms.size()) pick[s++] = 0;
    if (s == slots.size()) break;
  }
  return total;
}

}  // namespace

Complex splice_and_evaluate(const Diagram& d, const std::vector<int>& colors, const RootParams& ctx) {
  for (int a : colors)
    if (a > ctx.max_color())
      throw DomainError("color " + std::to_string(a) + " exceeds r-2 = " + std::to_string(ctx.max_color()));
  const auto weights = complex_weights(ctx);
  return splice<Complex>(
      d, colors, [&](int a) { return jw(a, ctx); },
      [&](StateNetwork net) { return state_sum(std::move(net), weights, false); });
}

DeltaFraction splice_and_evaluate_generic(const Diagram& d, const std::vector<int>& colors) {
  const auto weights = generic_weights();
  return splice<DeltaFraction>(
      d, colors, [](int a) { return jw_generic(a); },
      [&](StateNetwork net) { return DeltaFraction(state_sum(std::move(net), weights, false)); });
}

}  // namespace vkt
