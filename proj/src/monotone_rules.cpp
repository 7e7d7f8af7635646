#include "cake/monotone_rules.hpp"

#include "cake/parametric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cake {

namespace {

std::vector<Rat> scales(const Problem& p, ValueMode mode) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < p.agent_count(); ++i)
    out.push_back(mode == ValueMode::Relative ? p.total(i) : Rat(1));
  return out;
}

// Continuous moving-knife process, advanced from event to event.
//
// Knife k is the right end of the piece of agent order[k]. Invariant: piece k
// is worth screen * scale[order[k]] to its owner. Between two events every
// knife moves at a constant rate, so each step is solved exactly.
//
//  * phase 1 (no knife is stuck): the screen value rises and all knives move.
//  * phase 2 (some knife sits at or inside a zero-density stretch of its own
//    agent): the screen is frozen, the rightmost stuck knife slides right
//    through the stretch and every knife after it follows to keep its value.
//
// Events are knives reaching a slice boundary. The process ends when the last
// knife reaches the end of the cake.
class KnifeSimulation {
 public:
  KnifeSimulation(const Problem& p, const Ordering& order, ValueMode mode)
      : p_(p), order_(order), scale_(scales(p, mode)), knife_(order.size(), Rat(0)) {
    if (order.size() != p.agent_count()) throw std::invalid_argument("ordering size mismatch");
  }

  EquitableResult run(ValueMode mode) {
    const Rat& c = p_.cake_length();
    const std::size_t n = order_.size();
    std::size_t guard = 0;
    const std::size_t max_steps = 4 * (n + 1) * (p_.grid().size() + 2) + 16;
    while (knife_[n - 1] < c) {
      if (++guard > max_steps) throw std::logic_error("moving-knife simulation did not terminate");
      auto stuck = rightmost_stuck();
      if (stuck)
        slide(*stuck);
      else
        raise_screen();
    }
    EquitableResult out;
    out.ordering = order_;
    out.cuts.assign(knife_.begin(), knife_.end() - 1);
    out.value = screen_;
    out.mode = mode;
    verify(out);
    return out;
  }

 private:
  const Measure& owner(std::size_t k) const { return p_.measure(order_[k]); }
  Rat left_of(std::size_t k) const { return k == 0 ? Rat(0) : knife_[k - 1]; }

  Rat next_break(const Rat& x) const {
    const auto& b = p_.grid().breakpoints();
    return *std::upper_bound(b.begin(), b.end(), x);
  }

  std::optional<std::size_t> rightmost_stuck() const {
    for (std::size_t k = order_.size(); k-- > 0;)
      if (knife_[k] < p_.cake_length() && owner(k).density_right_of(knife_[k]) == 0) return k;
    return std::nullopt;
  }

  // Advance every knife k >= first by rate[k] * step, where step is the largest
  // move before some moving knife reaches its next slice boundary.
  void advance(std::size_t first, const std::vector<Rat>& rate, bool moves_screen) {
    std::optional<Rat> step;
    for (std::size_t k = first; k < order_.size(); ++k) {
      if (rate[k] <= 0) continue;
      Rat s = (next_break(knife_[k]) - knife_[k]) / rate[k];
      if (!step || s < *step) step = s;
    }
    if (!step) throw std::logic_error("moving-knife simulation stalled");
    for (std::size_t k = first; k < order_.size(); ++k) knife_[k] += rate[k] * *step;
    if (moves_screen) screen_ += *step;
  }

  void raise_screen() {
    std::vector<Rat> rate(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
      Rat inflow = scale_[order_[k]];
      if (k > 0) inflow += owner(k).density_right_of(left_of(k)) * rate[k - 1];
      rate[k] = inflow / owner(k).density_right_of(knife_[k]);
    }
    advance(0, rate, true);
  }

  void slide(std::size_t stuck) {
    std::vector<Rat> rate(order_.size(), Rat(0));
    rate[stuck] = 1;
    for (std::size_t k = stuck + 1; k < order_.size(); ++k)
      rate[k] = owner(k).density_right_of(left_of(k)) * rate[k - 1] /
                owner(k).density_right_of(knife_[k]);
    advance(stuck, rate, false);
  }

  void verify(const EquitableResult& r) const {
    Division x = r.division(p_);
    for (std::size_t k = 0; k < order_.size(); ++k) {
      std::size_t agent = order_[k];
      if (p_.measure(agent).value(x.pieces[agent].front()) != r.value * scale_[agent])
        throw std::logic_error("moving-knife simulation produced an unequal partition");
    }
  }

  const Problem& p_;
  const Ordering& order_;
  std::vector<Rat> scale_;
  std::vector<Rat> knife_;
  Rat screen_ = 0;
};

}  // namespace

Division exact_proportional(const Problem& p) {
  const std::size_t n = p.agent_count();
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  Division x;
  x.pieces.resize(n);
  Rat start = 0;
  while (!remaining.empty()) {
    std::size_t winner_pos = 0;
    Rat winner_mark;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      std::size_t agent = remaining[pos];
      auto mark = p.measure(agent).leftmost_mark(start, p.total(agent) / Rat(n));
      if (!mark) throw std::logic_error("exact-proportional: missing mark");
      if (pos == 0 || *mark < winner_mark) {
        winner_pos = pos;
        winner_mark = *mark;
      }
    }
    x.pieces[remaining[winner_pos]] = {Interval{start, winner_mark}};
    start = winner_mark;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(winner_pos));
  }
  return x;
}

EquitableResult equitable_for_ordering(const Problem& p, const Ordering& order, ValueMode mode) {
  KnifeSimulation sim(p, order, mode);
  return sim.run(mode);
}

Rat equitable_value_oracle(const Problem& p, const Ordering& order, ValueMode mode) {
  std::vector<Rat> zero(p.agent_count(), Rat(0));
  auto scale = scales(p, mode);
  return max_feasible_parameter(p, order, zero, scale);
}

RuleOutput max_equitable(const Problem& p, ValueMode mode) {
  RuleOutput out;
  out.rule = mode == ValueMode::Relative ? "relative-equitable" : "absolute-equitable";
  auto orders = all_orderings(p.agent_count());
  std::vector<Rat> values;
  for (const auto& order : orders) values.push_back(equitable_value_oracle(p, order, mode));
  Rat best = *std::max_element(values.begin(), values.end());
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (values[k] != best) continue;
    auto sim = equitable_for_ordering(p, orders[k], mode);
    if (sim.value != best)
      throw std::logic_error("equitable simulation and parametric oracle disagree for ordering " +
                             format_ordering(p, orders[k]));
    out.divisions.push_back(sim.division(p));
    out.utilities.push_back(utilities(p, out.divisions.back()));
    out.orderings.push_back(orders[k]);
  }
  out.equitable_value = best;
  return out;
}

Division rightmost_mark_rule(const Problem& p) {
  if (p.agent_count() != 2) throw RulePreconditionError("rightmost-mark requires exactly 2 agents");
  Rat first = *p.measure(0).rightmost_mark(p.total(0) / 2);
  Rat second = *p.measure(1).rightmost_mark(p.total(1) / 2);
  // The right piece goes to the agent with the larger mark; ties go to the second agent.
  std::size_t right_owner = first > second ? 0 : 1;
  Rat cut = std::max(first, second);
  Division x;
  x.pieces.resize(2);
  x.pieces[right_owner] = {Interval{cut, p.cake_length()}};
  x.pieces[1 - right_owner] = {Interval{0, cut}};
  return x;
}

}  // namespace cake
