#include "cake/classic.hpp"

#include "cake/rule_output.hpp"

#include <algorithm>
#include <stdexcept>

namespace cake {

namespace {

// Index of the largest value; ties resolve to the rightmost candidate.
std::size_t best_rightmost(const std::vector<Rat>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] >= values[best]) best = k;
  return best;
}

Rat mark(const Measure& m, const Rat& start, const Rat& target) {
  auto x = m.leftmost_mark(start, target);
  if (!x) throw std::logic_error("protocol asked for a mark beyond the cake");
  return *x;
}

void check_ordering(const Problem& p, const Ordering& order) {
  std::vector<bool> seen(p.agent_count(), false);
  if (order.size() != p.agent_count()) throw std::invalid_argument("ordering must list every agent");
  for (auto i : order) {
    if (i >= p.agent_count() || seen[i]) throw std::invalid_argument("invalid agent ordering");
    seen[i] = true;
  }
}

// Cuts a piece into `parts` parts of equal value to `m`, each a minimal
// prefix of what remains, sweeping the piece's intervals left to right.
std::vector<Piece> split_equal(const Measure& m, const Piece& piece, std::size_t parts) {
  Piece norm = normalize_piece(piece);
  std::vector<Piece> out(parts);
  if (norm.empty()) return out;
  Rat share = m.value(norm, UtilityMode::Additive) / Rat(parts);
  std::size_t idx = 0;
  Rat cur = norm.front().lo;
  auto step_interval = [&] {
    ++idx;
    if (idx < norm.size()) cur = norm[idx].lo;
  };
  for (std::size_t part = 0; part + 1 < parts; ++part) {
    Rat need = share;
    while (idx < norm.size()) {
      Rat avail = m.value(Interval{cur, norm[idx].hi});
      if (avail >= need) {
        Rat end = mark(m, cur, need);
        out[part].push_back({cur, end});
        cur = end;
        break;
      }
      out[part].push_back({cur, norm[idx].hi});
      need -= avail;
      step_interval();
    }
  }
  while (idx < norm.size()) {
    out.back().push_back({cur, norm[idx].hi});
    step_interval();
  }
  for (auto& part : out) part = normalize_piece(std::move(part));
  return out;
}

Piece join(Piece a, const Piece& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize_piece(std::move(a));
}

}  // namespace

Division cut_and_choose(const Problem& p, std::size_t cutter) {
  if (p.agent_count() != 2) throw RulePreconditionError("cut-and-choose requires exactly 2 agents");
  if (cutter > 1) throw std::invalid_argument("cut-and-choose: unknown cutter");
  std::size_t chooser = 1 - cutter;
  Rat cut = mark(p.measure(cutter), 0, p.total(cutter) / 2);
  Interval left{0, cut};
  Interval right{cut, p.cake_length()};
  Division x;
  x.pieces.resize(2);
  bool takes_left = p.measure(chooser).value(left) > p.measure(chooser).value(right);
  x.pieces[chooser] = {takes_left ? left : right};
  x.pieces[cutter] = {takes_left ? right : left};
  return x;
}

Division banach_knaster(const Problem& p, const Ordering& order) {
  check_ordering(p, order);
  std::vector<std::size_t> remaining(order.begin(), order.end());
  Division x;
  x.pieces.resize(p.agent_count());
  Rat start = 0;
  const Rat& c = p.cake_length();
  while (remaining.size() > 1) {
    Rat m(remaining.size());
    auto share = [&](std::size_t agent) { return p.measure(agent).value(Interval{start, c}) / m; };
    std::size_t holder_pos = 0;
    Rat end = mark(p.measure(remaining[0]), start, share(remaining[0]));
    for (std::size_t pos = 1; pos < remaining.size(); ++pos) {
      std::size_t agent = remaining[pos];
      if (p.measure(agent).value(Interval{start, end}) > share(agent)) {
        end = mark(p.measure(agent), start, share(agent));
        holder_pos = pos;
      }
    }
    x.pieces[remaining[holder_pos]] = {Interval{start, end}};
    start = end;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(holder_pos));
  }
  x.pieces[remaining.front()] = {Interval{start, c}};
  return x;
}

Division dubins_spanier(const Problem& p) {
  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < p.agent_count(); ++i) remaining.push_back(i);
  Division x;
  x.pieces.resize(p.agent_count());
  Rat start = 0;
  const Rat& c = p.cake_length();
  while (remaining.size() > 1) {
    Rat m(remaining.size());
    std::size_t winner = 0;
    Rat stop;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      const Measure& meas = p.measure(remaining[pos]);
      Rat s = mark(meas, start, meas.value(Interval{start, c}) / m);
      if (pos == 0 || s < stop) {
        winner = pos;
        stop = s;
      }
    }
    x.pieces[remaining[winner]] = {Interval{start, stop}};
    start = stop;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(winner));
  }
  x.pieces[remaining.front()] = {Interval{start, c}};
  return x;
}

namespace {

void even_paz_split(const Problem& p, std::vector<std::size_t> agents, const Rat& lo, const Rat& hi,
                    Division& x) {
  if (agents.size() == 1) {
    x.pieces[agents.front()] = {Interval{lo, hi}};
    return;
  }
  const std::size_t m = agents.size();
  const std::size_t k = m / 2;
  std::vector<std::pair<Rat, std::size_t>> marks;
  for (auto agent : agents) {
    const Measure& meas = p.measure(agent);
    Rat target = meas.value(Interval{lo, hi}) * Rat(k) / Rat(m);
    marks.emplace_back(mark(meas, lo, target), agent);
  }
  std::sort(marks.begin(), marks.end());
  Rat cut = marks[k - 1].first;
  std::vector<std::size_t> left, right;
  for (std::size_t pos = 0; pos < m; ++pos) (pos < k ? left : right).push_back(marks[pos].second);
  even_paz_split(p, std::move(left), lo, cut, x);
  even_paz_split(p, std::move(right), cut, hi, x);
}

}  // namespace

Division even_paz(const Problem& p) {
  std::vector<std::size_t> agents;
  for (std::size_t i = 0; i < p.agent_count(); ++i) agents.push_back(i);
  Division x;
  x.pieces.resize(p.agent_count());
  even_paz_split(p, std::move(agents), 0, p.cake_length(), x);
  return x;
}

Division fink(const Problem& p, const Ordering& order) {
  check_ordering(p, order);
  Division x;
  x.pieces.resize(p.agent_count());
  x.pieces[order.front()] = {Interval{0, p.cake_length()}};
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::size_t newcomer = order[k];
    for (std::size_t e = 0; e < k; ++e) {
      std::size_t incumbent = order[e];
      auto parts = split_equal(p.measure(incumbent), x.pieces[incumbent], k + 1);
      std::vector<Rat> worth;
      for (const auto& part : parts) worth.push_back(p.measure(newcomer).value(part, UtilityMode::Additive));
      std::size_t pick = best_rightmost(worth);
      Piece kept;
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (j != pick) kept = join(std::move(kept), parts[j]);
      x.pieces[incumbent] = std::move(kept);
      x.pieces[newcomer] = join(std::move(x.pieces[newcomer]), parts[pick]);
    }
  }
  return x;
}

Division selfridge_conway(const Problem& p, const Ordering& roles) {
  if (p.agent_count() != 3) throw RulePreconditionError("selfridge-conway requires exactly 3 agents");
  check_ordering(p, roles);
  const std::size_t cutter = roles[0], trimmer = roles[1], third = roles[2];
  const Rat& c = p.cake_length();
  auto additive = [&](std::size_t agent, const Piece& piece) {
    return p.measure(agent).value(piece, UtilityMode::Additive);
  };

  Rat third_of = p.total(cutter) / 3;
  Rat m1 = mark(p.measure(cutter), 0, third_of);
  Rat m2 = mark(p.measure(cutter), m1, third_of);
  std::vector<Piece> parts = {{Interval{0, m1}}, {Interval{m1, m2}}, {Interval{m2, c}}};

  std::vector<Rat> trimmer_view;
  for (const auto& part : parts) trimmer_view.push_back(additive(trimmer, part));
  std::size_t best = best_rightmost(trimmer_view);
  Rat second = 0;
  for (std::size_t k = 0; k < 3; ++k)
    if (k != best) second = std::max(second, trimmer_view[k]);

  Division x;
  x.pieces.resize(3);
  std::vector<bool> taken(3, false);
  // Picks the chooser's favourite among the untaken parts (ties: rightmost).
  auto choose = [&](std::size_t agent, const std::vector<Piece>& options, std::vector<bool>& used,
                    std::optional<std::size_t> avoid_unless_strict = std::nullopt) {
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < options.size(); ++k) {
      if (used[k] || (avoid_unless_strict && k == *avoid_unless_strict)) continue;
      if (!pick || additive(agent, options[k]) >= additive(agent, options[*pick])) pick = k;
    }
    if (avoid_unless_strict && !used[*avoid_unless_strict] &&
        (!pick || additive(agent, options[*avoid_unless_strict]) > additive(agent, options[*pick])))
      pick = avoid_unless_strict;
    used[*pick] = true;
    return *pick;
  };

  if (trimmer_view[best] == second) {
    for (std::size_t agent : {third, trimmer, cutter}) x.pieces[agent] = parts[choose(agent, parts, taken)];
    return x;
  }

  // The trimmer keeps the minimal prefix of its favourite worth its second best.
  const Interval favourite = parts[best].front();
  Rat trim_at = mark(p.measure(trimmer), favourite.lo, second);
  parts[best] = {Interval{favourite.lo, trim_at}};
  Interval trimmings{trim_at, favourite.hi};

  std::size_t third_pick = choose(third, parts, taken, best);
  x.pieces[third] = parts[third_pick];
  std::size_t trimmer_pick = taken[best] ? choose(trimmer, parts, taken) : (taken[best] = true, best);
  x.pieces[trimmer] = parts[trimmer_pick];
  x.pieces[cutter] = parts[choose(cutter, parts, taken)];

  std::size_t holder = third_pick == best ? third : trimmer;
  std::size_t divider = holder == third ? trimmer : third;
  auto crumbs = split_equal(p.measure(divider), {trimmings}, 3);
  std::vector<bool> crumb_taken(3, false);
  for (std::size_t agent : {holder, cutter, divider})
    x.pieces[agent] = join(std::move(x.pieces[agent]), crumbs[choose(agent, crumbs, crumb_taken)]);
  return x;
}

}  // namespace cake
