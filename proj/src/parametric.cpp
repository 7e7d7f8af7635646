#include "cake/parametric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cake {

namespace {

struct Affine {
  Rat a;
  Rat b;
  Rat at(const Rat& t) const { return a + b * t; }
};

// Per-agent step data extended by a sentinel slice [c, inf) of density 1, so
// that every mark exists and infeasibility shows up as F(t) > c.
struct Extended {
  std::vector<Rat> start;    // S + 1 entries, start[S] = c
  std::vector<Rat> density;  // S + 1 entries, density[S] = 1
  std::vector<Rat> prefix;   // S + 1 entries, prefix[k] = value of [0, start[k]]
};

Extended extend(const Measure& m) {
  const auto& grid = m.grid();
  Extended e;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    e.start.push_back(grid.start(k));
    e.density.push_back(m.density(k));
    e.prefix.push_back(k == 0 ? Rat(0) : e.prefix.back() + m.density(k - 1) * grid.length(k - 1));
  }
  e.start.push_back(grid.cake_length());
  e.density.push_back(1);
  e.prefix.push_back(m.total());
  return e;
}

struct Bound {
  bool finite = false;
  Rat value;
};

// The cell around a parameter value: F is `final` on (lower, upper].
struct Cell {
  Bound lower;  // open
  Bound upper;  // closed
  Affine final;
};

class Search {
 public:
  Search(const Problem& p, const Ordering& order, std::span<const Rat> base,
         std::span<const Rat> weight)
      : order_(order), base_(base), weight_(weight), cake_(p.cake_length()) {
    if (order.size() != p.agent_count() || base.size() != p.agent_count() ||
        weight.size() != p.agent_count())
      throw std::invalid_argument("parametric search: size mismatch");
    for (const auto& w : weight)
      if (w <= 0) throw std::invalid_argument("parametric search: weights must be positive");
    for (std::size_t i = 0; i < p.agent_count(); ++i) agents_.push_back(extend(p.measure(i)));
    first_total_ = p.total(order.front());
  }

  Cell cell_at(const Rat& t) const {
    Cell cell;
    auto raise_lower = [&](const Rat& v) {
      if (!cell.lower.finite || v > cell.lower.value) cell.lower = {true, v};
    };
    auto cut_upper = [&](const Rat& v) {
      if (!cell.upper.finite || v < cell.upper.value) cell.upper = {true, v};
    };

    Affine s{0, 0};
    std::size_t k = 0;
    for (std::size_t agent : order_) {
      const Extended& e = agents_[agent];
      const std::size_t sentinel = e.start.size() - 1;
      Affine target{base_[agent], weight_[agent]};
      Rat zero_at = -base_[agent] / weight_[agent];
      if (target.at(t) <= 0) {
        cut_upper(zero_at);
        continue;  // demands nothing: the mark stays at the start
      }
      raise_lower(zero_at);

      Affine need{e.prefix[k] + e.density[k] * (s.a - e.start[k]) + target.a,
                  e.density[k] * s.b + target.b};
      Rat need_now = need.at(t);
      auto j = static_cast<std::size_t>(
          std::lower_bound(e.prefix.begin(), e.prefix.end(), need_now) - e.prefix.begin());
      std::size_t m = (j == e.prefix.size()) ? sentinel : j - 1;

      Affine y{e.start[m] + (need.a - e.prefix[m]) / e.density[m], need.b / e.density[m]};
      if (y.b > 0) {
        raise_lower((e.start[m] - y.a) / y.b);
        if (m < sentinel) cut_upper((e.start[m + 1] - y.a) / y.b);
      }
      s = y;
      k = m;
    }
    cell.final = s;
    if ((cell.lower.finite && !(cell.lower.value < t)) || (cell.upper.finite && cell.upper.value < t))
      throw std::logic_error("parametric search: cell does not contain its probe");
    return cell;
  }

  bool feasible(const Rat& t) const { return cell_at(t).final.at(t) <= cake_; }

  Rat solve() const {
    Rat lo = 0;
    bool have_lo = false;
    for (std::size_t agent : order_) {
      Rat z = -base_[agent] / weight_[agent];
      if (!have_lo || z < lo) lo = z;
      have_lo = true;
    }
    std::size_t lead = order_.front();
    Rat hi = (first_total_ - base_[lead]) / weight_[lead] + 1;
    if (hi <= lo) hi = lo + 1;

    for (int iter = 0; iter < 100000; ++iter) {
      // Everything in lo's cell up to the crossing with c is feasible.
      Cell c = cell_at(lo);
      if (c.final.b > 0) {
        Rat cross = (cake_ - c.final.a) / c.final.b;
        if (!c.upper.finite || cross < c.upper.value) return cross;
      }
      if (!c.upper.finite)
        throw std::logic_error("parametric search: unbounded feasible cell");
      lo = c.upper.value;

      // hi's cell: either it contains the answer or it starts at it.
      Cell d = cell_at(hi);
      if (d.final.b > 0) {
        Rat cross = (cake_ - d.final.a) / d.final.b;
        if (!d.lower.finite || cross > d.lower.value) return cross;
      }
      if (d.lower.finite && d.lower.value >= lo) {
        if (d.lower.value == lo) return lo;
        if (feasible(d.lower.value)) {
          lo = d.lower.value;
        } else {
          hi = d.lower.value;
        }
        continue;
      }

      Rat mid = (lo + hi) / 2;
      if (feasible(mid))
        lo = mid;
      else
        hi = mid;
    }
    throw std::logic_error("parametric search did not converge");
  }

 private:
  const Ordering& order_;
  std::span<const Rat> base_;
  std::span<const Rat> weight_;
  Rat cake_;
  Rat first_total_;
  std::vector<Extended> agents_;
};

}  // namespace

Rat max_feasible_parameter(const Problem& p, const Ordering& order, std::span<const Rat> base,
                           std::span<const Rat> weight) {
  Search search(p, order, base, weight);
  Rat t = search.solve();
  if (!search.feasible(t)) throw std::logic_error("parametric search returned an infeasible point");
  return t;
}

}  // namespace cake
