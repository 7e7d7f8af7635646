#include "cake/division.hpp"

#include "cake/parametric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cake {

std::vector<Ordering> all_orderings(std::size_t n) {
  Ordering order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Ordering> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::string format_ordering(const Problem& p, const Ordering& order) {
  std::string s;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) s += ',';
    s += p.name(order[k]);
  }
  return s;
}

Ordering parse_ordering(const Problem& p, std::string_view names) {
  Ordering order;
  std::size_t pos = 0;
  while (pos <= names.size()) {
    auto comma = names.find(',', pos);
    auto token = names.substr(pos, comma == std::string_view::npos ? names.size() - pos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    order.push_back(p.index_of(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::set<std::size_t> distinct(order.begin(), order.end());
  if (order.size() != p.agent_count() || distinct.size() != order.size())
    throw std::invalid_argument("ordering must list every agent exactly once");
  return order;
}

std::string_view to_string(ValueMode mode) {
  return mode == ValueMode::Relative ? "relative" : "absolute";
}

ValueMode parse_value_mode(std::string_view text) {
  if (text == "relative") return ValueMode::Relative;
  if (text == "absolute") return ValueMode::Absolute;
  throw std::invalid_argument("unknown value mode: " + std::string(text));
}

void validate(const Problem& p, const Division& x) {
  if (x.pieces.size() != p.agent_count())
    throw std::invalid_argument("division must have one piece per agent");
  std::vector<Interval> all;
  for (const auto& piece : x.pieces) {
    for (const auto& iv : piece)
      if (iv.lo < 0 || iv.hi > p.cake_length())
        throw std::invalid_argument("division interval outside the cake");
    auto norm = normalize_piece(piece);
    all.insert(all.end(), norm.begin(), norm.end());
  }
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t k = 1; k < all.size(); ++k)
    if (all[k].lo < all[k - 1].hi)
      throw std::invalid_argument("pieces of different agents overlap");
}

Division pi_partition(const Problem& p, const Ordering& order, std::span<const Rat> cuts) {
  const std::size_t n = p.agent_count();
  if (order.size() != n || cuts.size() + 1 < n)
    throw std::invalid_argument("pi_partition: need n-1 cuts for n agents");
  Division x;
  x.pieces.resize(n);
  Rat left = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Rat right = (k + 1 == n) ? p.cake_length() : cuts[k];
    if (right < left || right > p.cake_length())
      throw std::invalid_argument("pi_partition: cuts must be nondecreasing inside the cake");
    x.pieces[order[k]] = {Interval{left, right}};
    left = right;
  }
  return x;
}

UtilityVector utilities(const Problem& p, const Division& x, UtilityMode mode) {
  validate(p, x);
  UtilityVector u;
  u.mode = mode;
  for (std::size_t i = 0; i < p.agent_count(); ++i) {
    u.absolute.push_back(p.measure(i).value(x.pieces[i], mode));
    u.relative.push_back(u.absolute.back() / p.total(i));
  }
  return u;
}

bool check_prop(const Problem& p, const Division& x, UtilityMode mode) {
  auto u = utilities(p, x, mode);
  Rat share = Rat(1) / Rat(p.agent_count());
  return std::all_of(u.relative.begin(), u.relative.end(), [&](const Rat& r) { return r >= share; });
}

bool check_ef(const Problem& p, const Division& x, UtilityMode mode) {
  validate(p, x);
  for (std::size_t i = 0; i < p.agent_count(); ++i) {
    Rat own = p.measure(i).value(x.pieces[i], mode);
    for (std::size_t j = 0; j < p.agent_count(); ++j)
      if (j != i && p.measure(i).value(x.pieces[j], mode) > own) return false;
  }
  return true;
}

EquitableCheck check_equitable(const Problem& p, const Division& x, ValueMode value_mode,
                               UtilityMode mode) {
  auto u = utilities(p, x, mode);
  const auto& vals = value_mode == ValueMode::Relative ? u.relative : u.absolute;
  auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
  EquitableCheck out;
  out.stats = {*lo, *hi};
  out.equitable = *lo == *hi;
  return out;
}

std::optional<std::vector<Rat>> greedy_fit(const Problem& p, const Ordering& order,
                                           std::span<const Rat> targets) {
  if (targets.size() != p.agent_count() || order.size() != p.agent_count())
    throw std::invalid_argument("greedy_fit: size mismatch");
  std::vector<Rat> cuts;
  Rat at = 0;
  for (std::size_t agent : order) {
    auto mark = p.measure(agent).leftmost_mark(at, targets[agent]);
    if (!mark) return std::nullopt;
    at = *mark;
    cuts.push_back(at);
  }
  return cuts;
}

std::optional<ConstrainedMax> constrained_max(const Problem& p, const Ordering& order,
                                              std::size_t pivot, std::span<const Rat> targets) {
  const std::size_t n = p.agent_count();
  if (targets.size() != n || order.size() != n) throw std::invalid_argument("constrained_max: size mismatch");
  auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), pivot) - order.begin());
  if (pos == n) throw std::invalid_argument("constrained_max: pivot not in ordering");
  auto demand = [&](std::size_t agent) { return std::max(targets[agent], Rat(0)); };

  Division x;
  x.pieces.resize(n);
  Rat left = 0;
  for (std::size_t k = 0; k < pos; ++k) {
    auto mark = p.measure(order[k]).leftmost_mark(left, demand(order[k]));
    if (!mark) return std::nullopt;
    x.pieces[order[k]] = {Interval{left, *mark}};
    left = *mark;
  }
  Rat right = p.cake_length();
  for (std::size_t k = n; k-- > pos + 1;) {
    auto mark = p.measure(order[k]).suffix_mark(right, demand(order[k]));
    if (!mark) return std::nullopt;
    x.pieces[order[k]] = {Interval{*mark, right}};
    right = *mark;
  }
  if (right < left) return std::nullopt;
  x.pieces[pivot] = {Interval{left, right}};
  return ConstrainedMax{p.measure(pivot).value(Interval{left, right}), std::move(x)};
}

std::optional<ConstrainedMax> constrained_max_any(const Problem& p, std::size_t pivot,
                                                  std::span<const Rat> targets) {
  std::optional<ConstrainedMax> best;
  for (const auto& order : all_orderings(p.agent_count())) {
    auto r = constrained_max(p, order, pivot, targets);
    if (r && (!best || r->value > best->value)) best = std::move(r);
  }
  return best;
}

Rat max_slack(const Problem& p, const Ordering& order, std::span<const Rat> base) {
  std::vector<Rat> totals;
  for (std::size_t i = 0; i < p.agent_count(); ++i) totals.push_back(p.total(i));
  return max_feasible_parameter(p, order, base, totals);
}

EfficiencyCheck check_wpo_connected(const Problem& p, const Division& x) {
  auto u = utilities(p, x, UtilityMode::Connected).absolute;
  for (const auto& order : all_orderings(p.agent_count())) {
    Rat slack = max_slack(p, order, u);
    if (slack <= 0) continue;
    std::vector<Rat> targets;
    for (std::size_t i = 0; i < u.size(); ++i) targets.push_back(u[i] + slack / 2 * p.total(i));
    auto cuts = greedy_fit(p, order, targets);
    if (!cuts) throw std::logic_error("wpo: slack reported feasible but greedy fit failed");
    Division witness = pi_partition(p, order, *cuts);
    if (!strictly_dominates(p, witness, x, UtilityMode::Connected))
      throw std::logic_error("wpo: witness does not dominate");
    EfficiencyCheck out;
    out.pass = false;
    out.ordering = order;
    out.witness_utilities = utilities(p, witness).absolute;
    out.witness = std::move(witness);
    return out;
  }
  return {};
}

EfficiencyCheck check_po_connected(const Problem& p, const Division& x) {
  auto u = utilities(p, x, UtilityMode::Connected).absolute;
  for (const auto& order : all_orderings(p.agent_count())) {
    for (std::size_t pivot = 0; pivot < p.agent_count(); ++pivot) {
      auto best = constrained_max(p, order, pivot, u);
      if (!best || best->value <= u[pivot]) continue;
      auto w = utilities(p, best->division).absolute;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < u[i]) throw std::logic_error("po: witness hurts an agent");
      EfficiencyCheck out;
      out.pass = false;
      out.ordering = order;
      out.witness_utilities = std::move(w);
      out.witness = std::move(best->division);
      return out;
    }
  }
  return {};
}

Rat nash_product(const Problem& p, const Division& x, UtilityMode mode) {
  Rat product = 1;
  for (const auto& v : utilities(p, x, mode).absolute) product *= v;
  return product;
}

bool check_esv(const Problem& p, std::span<const Division> divisions, UtilityMode mode) {
  if (divisions.empty()) throw std::invalid_argument("check_esv: empty division set");
  auto first = utilities(p, divisions.front(), mode);
  return std::all_of(divisions.begin() + 1, divisions.end(),
                     [&](const Division& d) { return utilities(p, d, mode) == first; });
}

bool strictly_dominates(const Problem& p, const Division& better, const Division& base,
                        UtilityMode mode) {
  auto a = utilities(p, better, mode).absolute;
  auto b = utilities(p, base, mode).absolute;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] > b[i])) return false;
  return true;
}

}  // namespace cake
