#pragma once

// Exact chromatic-sum solving on rooted trees.
//
// Every routine here leans on two facts about minimum-sum colorings, both of
// which the test suite re-checks against exhaustive search:
//   * color box: a vertex colored above deg(v)+1 could take some color
//     <= deg(v)+1 absent from its neighborhood and strictly lower the sum, so
//     all minimal colorings live in the per-vertex boxes 1..deg(v)+1;
//   * contiguity: a used color with an unused color below it allows a
//     class-wide recolor that lowers the sum, so minimal colorings use exactly
//     {1..max} and "number of colors" equals "max color".
// The solver tabulates (min sum, min max-color among min-sum choices, exact
// count) per vertex and color, bottom-up over an iterative preorder.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumtree/tree.hpp"

namespace sumtree {

// Exact counter saturating at 2^63-1; below the cap the value is exact.
struct SatCount {
  static constexpr std::uint64_t kCap = 9'223'372'036'854'775'807ull;

  std::uint64_t value = 0;
  bool saturated = false;

  static SatCount zero() { return {}; }
  static SatCount one() { return {1, false}; }

  void add(const SatCount& other) {
    if (saturated || other.saturated || value > kCap - other.value) {
      value = kCap;
      saturated = true;
    } else {
      value += other.value;
    }
  }

  void mul(const SatCount& other) {
    if (value == 0 || other.value == 0) {
      value = 0;
      saturated = false;
      return;
    }
    if (saturated || other.saturated || value > kCap / other.value) {
      value = kCap;
      saturated = true;
    } else {
      value *= other.value;
    }
  }

  bool operator==(const SatCount&) const = default;
};

struct SolveReport {
  Sum sigma = 0;
  int strength = 0;
  SatCount count;
  Coloring witness;
};

namespace detail {

inline constexpr Sum kInfSum = std::numeric_limits<Sum>::max() / 4;

// Per-vertex cell rows over colors 1..deg(v)+1, laid out flat. ncells[v] may
// stop short of the full box: once a color's lower bound exceeds the
// second-best row value so far, neither it nor any higher color can reach an
// argmin set at this vertex or any parent combine, so the row is cut there.
struct DpTables {
  std::vector<int> off;
  std::vector<int> ncells;
  std::vector<Sum> min_sum;
  std::vector<int> min_max;
  std::vector<SatCount> count;

  int box(const RootedTree& tree, int v) const { return tree.degree(v) + 1; }
};

struct ChildPick {
  Sum best = kInfSum;
  int min_max = 0;
  SatCount count;
};

// Best subtree answer for child w when its parent takes color excluded:
// minimum over the child's computed row without that color, with tie counts
// summed and the least max-color among ties.
inline ChildPick pick_excluding(const DpTables& t, int w, int excluded) {
  ChildPick pick;
  const int base = t.off[w];
  for (int c = 1; c <= t.ncells[w]; ++c) {
    if (c == excluded) continue;
    const Sum s = t.min_sum[base + c - 1];
    if (s < pick.best) {
      pick.best = s;
      pick.min_max = t.min_max[base + c - 1];
      pick.count = t.count[base + c - 1];
    } else if (s == pick.best) {
      pick.min_max = std::min(pick.min_max, t.min_max[base + c - 1]);
      pick.count.add(t.count[base + c - 1]);
    }
  }
  return pick;
}

inline DpTables run_dp(const RootedTree& tree) {
  const int n = tree.n();
  DpTables t;
  t.off.resize(n + 1, 0);
  for (int v = 0; v < n; ++v) t.off[v + 1] = t.off[v] + t.box(tree, v);
  t.ncells.assign(n, 0);
  t.min_sum.assign(t.off[n], kInfSum);
  t.min_max.assign(t.off[n], 0);
  t.count.assign(t.off[n], SatCount::zero());

  const auto& order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const auto kids = tree.children(v);

    Sum floor_below = 0;  // sum of per-child row minima
    for (int w : kids) {
      Sum b = kInfSum;
      const int base = t.off[w];
      for (int c = 1; c <= t.ncells[w]; ++c) b = std::min(b, t.min_sum[base + c - 1]);
      floor_below = checked_add(floor_below, b);
    }

    Sum best1 = kInfSum, best2 = kInfSum;
    const int box = t.box(tree, v);
    for (int c = 1; c <= box; ++c) {
      if (floor_below + c > best2) break;
      Sum sum = c;
      int mx = c;
      SatCount cnt = SatCount::one();
      for (int w : kids) {
        const ChildPick pick = pick_excluding(t, w, c);
        sum = checked_add(sum, pick.best);
        mx = std::max(mx, pick.min_max);
        cnt.mul(pick.count);
      }
      t.min_sum[t.off[v] + c - 1] = sum;
      t.min_max[t.off[v] + c - 1] = mx;
      t.count[t.off[v] + c - 1] = cnt;
      t.ncells[v] = c;
      if (sum < best1) {
        best2 = best1;
        best1 = sum;
      } else {
        best2 = std::min(best2, sum);
      }
    }
  }
  return t;
}

// Lexicographically-least witness by pinning vertices in id order.
//
// Rows here are re-tabulated over boxes capped at the strength: some minimal
// coloring uses colors {1..strength} exactly, so the capped optimum equals
// sigma and stays equal while each vertex in turn takes the least color that
// keeps it reachable.
//
// A vertex's row is represented implicitly through aggregates over its
// children's (best, unique-argmin-color, second-best) summaries:
//   value(v,c) = c + base(v) + penalty(v,c),
// where base sums the children's bests and penalty(v,c) adds, for children
// whose unique best color is exactly c, the detour to their second best.
// Re-pinning a vertex then touches one child slot in each ancestor's
// aggregate, so a trial costs O(path length * box width) instead of a scan
// over every child — stars would otherwise make the search quadratic.
// Infeasible (infinite) entries are tracked as counts, never arithmetic.
class WitnessSearch {
 public:
  WitnessSearch(const RootedTree& tree, Sum sigma, int cap)
      : tree_(tree), sigma_(sigma), cap_(cap) {
    const int n = tree.n();
    off_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v)
      off_[v + 1] = off_[v] + std::min(tree.degree(v) + 1, cap_);
    base_finite_.assign(n, 0);
    base_inf_.assign(n, 0);
    pen_finite_.assign(off_[n], 0);
    pen_inf_.assign(off_[n], 0);
    best1_.assign(n, kInfSum);
    best2_.assign(n, kInfSum);
    best1_color_.assign(n, 0);
    pin_.assign(n, 0);
    const auto& order = tree.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      refresh_summary(*it);
      if (const int p = tree_.parent(*it); p != kNil) child_insert(p, *it);
    }
    assert(root_min() == sigma_ && "capped optimum must equal sigma");
  }

  Coloring run() {
    const int n = tree_.n();
    Coloring witness(n, 0);
    for (int v = 0; v < n; ++v) {
      bool accepted = false;
      for (int c = 1; c <= width(v) && !accepted; ++c) {
        pin_[v] = c;
        propagate_from(v);
        if (root_min() == sigma_) {
          witness[v] = c;
          accepted = true;
        }
      }
      assert(accepted && "some color must keep the optimum reachable");
      if (!accepted) throw std::logic_error("witness search lost the optimum");
    }
    return witness;
  }

 private:
  int width(int v) const { return off_[v + 1] - off_[v]; }

  Sum value(int v, int c) const {
    if (pin_[v] != 0 && c != pin_[v]) return kInfSum;
    if (base_inf_[v] > 0 || pen_inf_[off_[v] + c - 1] > 0) return kInfSum;
    return c + base_finite_[v] + pen_finite_[off_[v] + c - 1];
  }

  // best1/best2 over the row; best1_color_ is the argmin color when unique,
  // else 0 (a tie means "min excluding any one color" is still best1).
  void refresh_summary(int v) {
    Sum b1 = kInfSum, b2 = kInfSum;
    int b1c = 0;
    const int w = width(v);
    for (int c = 1; c <= w; ++c) {
      const Sum val = value(v, c);
      if (val < b1) {
        b2 = b1;
        b1 = val;
        b1c = c;
      } else if (val < b2) {
        b2 = val;
        if (val == b1) b1c = 0;
      }
    }
    if (b1 == b2) b1c = 0;
    best1_[v] = b1;
    best2_[v] = b2;
    best1_color_[v] = b1c;
  }

  // Apply (sign +1) or retract (sign -1) child w's current summary in parent
  // a's aggregates. A retraction must run before w's summary is refreshed.
  void child_apply(int a, int w, int sign) {
    if (best1_[w] >= kInfSum) {
      base_inf_[a] += sign;
      return;
    }
    base_finite_[a] += sign * best1_[w];
    const int c = best1_color_[w];
    if (c != 0 && c <= width(a)) {
      if (best2_[w] >= kInfSum)
        pen_inf_[off_[a] + c - 1] += sign;
      else
        pen_finite_[off_[a] + c - 1] += sign * (best2_[w] - best1_[w]);
    }
  }
  void child_insert(int a, int w) { child_apply(a, w, +1); }
  void child_remove(int a, int w) { child_apply(a, w, -1); }

  void propagate_from(int v) {
    for (int node = v; node != kNil; node = tree_.parent(node)) {
      const int p = tree_.parent(node);
      if (p != kNil) child_remove(p, node);
      refresh_summary(node);
      if (p != kNil) child_insert(p, node);
    }
  }

  Sum root_min() const {
    const int r = tree_.root();
    Sum best = kInfSum;
    for (int c = 1; c <= width(r); ++c) best = std::min(best, value(r, c));
    return best;
  }

  const RootedTree& tree_;
  Sum sigma_;
  int cap_;
  std::vector<int> off_;
  std::vector<Sum> base_finite_;
  std::vector<int> base_inf_;
  std::vector<Sum> pen_finite_;
  std::vector<int> pen_inf_;
  std::vector<Sum> best1_, best2_;
  std::vector<int> best1_color_;
  std::vector<int> pin_;
};

// Batch variant of forced_root_min_sum sharing one tabulation across colors.
inline std::vector<Sum> forced_root_min_sums(const RootedTree& tree,
                                             const std::vector<int>& colors) {
  const auto tables = run_dp(tree);
  std::vector<Sum> out;
  out.reserve(colors.size());
  for (int c : colors) {
    Sum total = c;
    for (int w : tree.children(tree.root()))
      total = checked_add(total, pick_excluding(tables, w, c).best);
    out.push_back(total);
  }
  return out;
}

// Adjacency restricted to the already-assigned side of an id-order scan.
inline std::vector<std::vector<int>> lower_id_neighbors(const RootedTree& tree) {
  std::vector<std::vector<int>> lower(tree.n());
  for (int v = 0; v < tree.n(); ++v) {
    if (v == tree.root()) continue;
    const int p = tree.parent(v);
    lower[std::max(v, p)].push_back(std::min(v, p));
  }
  return lower;
}

}  // namespace detail

inline SolveReport solve(const RootedTree& tree) {
  const auto tables = detail::run_dp(tree);
  const int root = tree.root();
  SolveReport report;
  report.sigma = detail::kInfSum;
  report.strength = 0;
  for (int c = 1; c <= tables.ncells[root]; ++c) {
    const Sum s = tables.min_sum[tables.off[root] + c - 1];
    if (s < report.sigma) {
      report.sigma = s;
      report.strength = tables.min_max[tables.off[root] + c - 1];
      report.count = tables.count[tables.off[root] + c - 1];
    } else if (s == report.sigma) {
      report.strength =
          std::min(report.strength, tables.min_max[tables.off[root] + c - 1]);
      report.count.add(tables.count[tables.off[root] + c - 1]);
    }
  }
  report.witness = detail::WitnessSearch(tree, report.sigma, report.strength).run();
  assert(is_proper(tree, report.witness));
  assert(coloring_sum(report.witness) == report.sigma);
  assert(*std::max_element(report.witness.begin(), report.witness.end()) ==
         report.strength);
  return report;
}

// Least sum over proper colorings with the root pinned to color c. The pin may
// exceed the root's own box; children keep their boxes.
inline Sum forced_root_min_sum(const RootedTree& tree, int c) {
  if (c < 1) throw input_error("root color must be >= 1");
  const auto tables = detail::run_dp(tree);
  Sum total = c;
  for (int w : tree.children(tree.root()))
    total = checked_add(total, detail::pick_excluding(tables, w, c).best);
  return total;
}

struct EnumerationResult {
  std::vector<Coloring> colorings;  // lexicographic by color sequence
  bool truncated = false;
};

// All minimal colorings in lex order, truncated at limit. The search ranges
// over colors 1..deg(v)+1 per vertex, which loses nothing: a vertex colored
// higher could take a cheaper color absent from its neighborhood.
inline EnumerationResult enumerate_minimal(const RootedTree& tree, std::uint64_t limit) {
  if (limit < 1) throw input_error("enumeration limit must be >= 1");
  const Sum sigma = solve(tree).sigma;
  const int n = tree.n();
  const auto lower = detail::lower_id_neighbors(tree);
  std::vector<int> box(n);
  for (int v = 0; v < n; ++v) box[v] = tree.degree(v) + 1;

  EnumerationResult result;
  std::vector<int> color(n, 0);
  std::vector<Sum> prefix(n + 1, 0);  // prefix[v] = sum of colors 0..v-1
  int pos = 0;
  while (pos >= 0) {
    ++color[pos];
    if (color[pos] > box[pos] ||
        prefix[pos] + color[pos] + (n - 1 - pos) > sigma) {
      color[pos] = 0;
      --pos;
      continue;
    }
    bool clash = false;
    for (int u : lower[pos]) clash = clash || color[u] == color[pos];
    if (clash) continue;
    if (pos == n - 1) {
      if (prefix[pos] + color[pos] == sigma) {
        result.colorings.push_back(color);
        if (result.colorings.size() == limit) {
          // A further minimal coloring may exist; keep probing until the next
          // hit or exhaustion so `truncated` is exact.
          bool more = false;
          while (pos >= 0 && !more) {
            ++color[pos];
            if (color[pos] > box[pos] ||
                prefix[pos] + color[pos] + (n - 1 - pos) > sigma) {
              color[pos] = 0;
              --pos;
              continue;
            }
            bool clash2 = false;
            for (int u : lower[pos]) clash2 = clash2 || color[u] == color[pos];
            if (clash2) continue;
            if (pos == n - 1) {
              more = prefix[pos] + color[pos] == sigma;
            } else {
              prefix[pos + 1] = prefix[pos] + color[pos];
              ++pos;
            }
          }
          result.truncated = more;
          return result;
        }
      }
      continue;
    }
    prefix[pos + 1] = prefix[pos] + color[pos];
    ++pos;
  }
  return result;
}

// Exhaustive reference solver; the same report contract as solve().
inline SolveReport solve_brute(const RootedTree& tree, int hard_cap = 12) {
  const int n = tree.n();
  if (n > hard_cap)
    throw resource_error("brute-force solver capped at " + std::to_string(hard_cap) +
                         " vertices, got " + std::to_string(n));
  const auto lower = detail::lower_id_neighbors(tree);
  std::vector<int> box(n);
  for (int v = 0; v < n; ++v) box[v] = tree.degree(v) + 1;

  SolveReport report;
  report.sigma = detail::kInfSum;

  // Pass 1: stream optimum, tie count, and least max-color over every proper
  // coloring inside the boxes.
  std::vector<int> color(n, 0);
  int pos = 0;
  Sum sum = 0;
  int maxc = 0;
  std::vector<int> maxstack(n + 1, 0);
  while (pos >= 0) {
    ++color[pos];
    if (color[pos] > box[pos]) {
      color[pos] = 0;
      --pos;
      if (pos >= 0) {
        sum -= color[pos];
        maxc = maxstack[pos];
      }
      continue;
    }
    bool clash = false;
    for (int u : lower[pos]) clash = clash || color[u] == color[pos];
    if (clash) continue;
    if (pos == n - 1) {
      const Sum total = sum + color[pos];
      const int total_max = std::max(maxc, color[pos]);
      if (total < report.sigma) {
        report.sigma = total;
        report.strength = total_max;
        report.count = SatCount::one();
      } else if (total == report.sigma) {
        report.strength = std::min(report.strength, total_max);
        report.count.add(SatCount::one());
      }
      continue;
    }
    maxstack[pos] = maxc;
    sum += color[pos];
    maxc = std::max(maxc, color[pos]);
    ++pos;
  }

  // Pass 2: the first enumerated coloring attaining (sigma, strength) is the
  // lexicographically least witness.
  std::fill(color.begin(), color.end(), 0);
  pos = 0;
  sum = 0;
  maxc = 0;
  while (pos >= 0) {
    ++color[pos];
    if (color[pos] > box[pos] || sum + color[pos] + (n - 1 - pos) > report.sigma) {
      color[pos] = 0;
      --pos;
      if (pos >= 0) {
        sum -= color[pos];
        maxc = maxstack[pos];
      }
      continue;
    }
    bool clash = false;
    for (int u : lower[pos]) clash = clash || color[u] == color[pos];
    if (clash) continue;
    if (pos == n - 1) {
      if (sum + color[pos] == report.sigma &&
          std::max(maxc, color[pos]) == report.strength) {
        report.witness = color;
        break;
      }
      continue;
    }
    maxstack[pos] = maxc;
    sum += color[pos];
    maxc = std::max(maxc, color[pos]);
    ++pos;
  }
  assert(!report.witness.empty());
  return report;
}

// n + (smaller side of the unique bipartition): the best sum any 2-coloring
// can reach, for contrast with sigma.
inline Sum best_two_coloring_sum(const RootedTree& tree) {
  if (tree.n() < 2)
    throw input_error("two-coloring sums need n >= 2 (a single vertex has chi = 1)");
  std::vector<int> parity(tree.n(), 0);
  Sum side[2] = {0, 0};
  for (int v : tree.preorder()) {
    if (v != tree.root()) parity[v] = parity[tree.parent(v)] ^ 1;
    ++side[parity[v]];
  }
  return tree.n() + std::min(side[0], side[1]);
}

}  // namespace sumtree
