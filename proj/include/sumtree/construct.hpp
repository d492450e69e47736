#pragma once

// Generation of the extremal tree family T_i^j with canonical colorings f_i^j.
//
// Index pairs are ordered by sum, then by second coordinate. T_1^1 is a single
// vertex colored 1. For any later pair (i,j) the root is colored i and carries,
// for each k in [i+j-1] \ {i}, two copies of the previously constructed tree
// for (k, ceil((i+j-k)/2)), attached in ascending k with copy A before copy B.
// Vertex ids are assigned in depth-first preorder of that attachment, which
// makes every build byte-deterministic.

#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sumtree/tree.hpp"

namespace sumtree {

inline constexpr long long kDefaultVertexBudget = 1'000'000;

struct PairIndex {
  int i = 1;
  int j = 1;
  bool operator==(const PairIndex&) const = default;
};

// (h,l) precedes (i,j) iff h+l < i+j, or h+l == i+j and l < j.
inline bool pair_less(PairIndex a, PairIndex b) {
  if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
  return a.j < b.j;
}

// Closed-form facts about (T_i^j, f_i^j): strength and top color are i+j-1,
// the root is colored i, forced-root colorings lose at least j, and the
// maximum degree is 2i-2 for j=1 and 2(i+j)-3 otherwise.
struct ExpectedProps {
  int strength = 1;
  long long max_degree = 0;
  int max_color = 1;
  int root_color = 1;
  int gap = 1;
};

inline ExpectedProps expected_props(PairIndex p) {
  ExpectedProps e;
  e.strength = p.i + p.j - 1;
  e.max_degree = p.j == 1 ? 2LL * p.i - 2 : 2LL * (p.i + p.j) - 3;
  e.max_color = p.i + p.j - 1;
  e.root_color = p.i;
  e.gap = p.j;
  return e;
}

struct CatalogEntry {
  PairIndex pair;
  long long n = 1;
  Sum sigma_f = 1;
  long long max_degree = 0;
  ExpectedProps expected;
};

namespace detail {

// ceil((i+j-k)/2) for the 1 <= k <= i+j-1 used by the construction.
inline int copy_second_index(int i, int j, int k) { return (i + j - k + 1) / 2; }

inline long long add_checked_ll(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw resource_error("tree size exceeds the representable range");
  return r;
}

inline long long mul_checked_ll(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw resource_error("tree size exceeds the representable range");
  return r;
}

// Shared memo over (i,j) -> (n, sigma). Holding one lock, all pairs with sum
// up to i+j are filled iteratively in pair order, so every lookup a fill needs
// is already present and recursion never runs under the lock.
inline std::pair<long long, Sum> size_and_sigma(int i, int j) {
  static std::map<std::pair<int, int>, std::pair<long long, Sum>> memo{
      {{1, 1}, {1, 1}}};
  static std::mutex lock;
  std::scoped_lock guard(lock);
  if (auto it = memo.find({i, j}); it != memo.end()) return it->second;
  for (int s = 2; s <= i + j; ++s) {
    for (int jj = 1; jj < s; ++jj) {
      const int ii = s - jj;
      if (memo.count({ii, jj})) continue;
      long long n = 1;
      Sum sigma = ii;
      for (int k = 1; k <= s - 1; ++k) {
        if (k == ii) continue;
        const auto& sub = memo.at({k, copy_second_index(ii, jj, k)});
        n = add_checked_ll(n, mul_checked_ll(2, sub.first));
        sigma = add_checked_ll(sigma, mul_checked_ll(2, sub.second));
      }
      memo[{ii, jj}] = {n, sigma};
    }
  }
  return memo.at({i, j});
}

}  // namespace detail

// Recurrence-only statistics: no tree is materialized.
inline CatalogEntry stats_only(int i, int j) {
  if (i < 1 || j < 1) throw input_error("pair indices must be >= 1");
  const auto [n, sigma] = detail::size_and_sigma(i, j);
  CatalogEntry entry;
  entry.pair = {i, j};
  entry.n = n;
  entry.sigma_f = sigma;
  entry.expected = expected_props({i, j});
  entry.max_degree = entry.expected.max_degree;
  return entry;
}

// Materialized T_i^j plus the ids of the root's child-subtree roots, which
// carry the argmax-degree vertices named by the degree formula when j >= 2.
struct BuildResult {
  RootedTree tree;
  Coloring coloring;
  struct TopChild {
    int k = 0;
    int m = 0;
    int root_a = 0;
    int root_b = 0;
  };
  std::vector<TopChild> top_children;  // ascending k
};

namespace detail {

inline int emit_subtree(int i, int j, int parent_id, std::vector<int>& parent,
                        Coloring& colors) {
  const int id = static_cast<int>(parent.size());
  parent.push_back(parent_id);
  colors.push_back(i);
  for (int k = 1; k <= i + j - 1; ++k) {
    if (k == i) continue;
    const int m = copy_second_index(i, j, k);
    // Each requested pair strictly precedes (i,j) in the build order, with
    // k+m <= i+j and m < j at equality, so the recursion terminates.
    assert(pair_less({k, m}, {i, j}));
    assert(k + m <= i + j && (k + m < i + j || m < j));
    emit_subtree(k, m, id, parent, colors);
    emit_subtree(k, m, id, parent, colors);
  }
  return id;
}

}  // namespace detail

inline BuildResult build_detailed(int i, int j,
                                  long long vertex_budget = kDefaultVertexBudget) {
  if (i < 1 || j < 1) throw input_error("pair indices must be >= 1");
  const auto entry = stats_only(i, j);
  if (entry.n > vertex_budget)
    throw resource_error("building T_" + std::to_string(i) + "^" + std::to_string(j) +
                         " needs " + std::to_string(entry.n) +
                         " vertices, over the budget of " + std::to_string(vertex_budget));
  if (entry.n > std::numeric_limits<int>::max())
    throw resource_error("tree size exceeds the representable range");

  std::vector<int> parent;
  Coloring colors;
  parent.reserve(entry.n);
  colors.reserve(entry.n);
  parent.push_back(kNil);
  colors.push_back(i);
  std::vector<BuildResult::TopChild> top;
  for (int k = 1; k <= i + j - 1; ++k) {
    if (k == i) continue;
    const int m = detail::copy_second_index(i, j, k);
    assert(pair_less({k, m}, {i, j}));
    assert(k + m <= i + j && (k + m < i + j || m < j));
    const int a = detail::emit_subtree(k, m, 0, parent, colors);
    const int b = detail::emit_subtree(k, m, 0, parent, colors);
    top.push_back({k, m, a, b});
  }
  assert(static_cast<long long>(parent.size()) == entry.n);
  return BuildResult{RootedTree(std::move(parent)), std::move(colors), std::move(top)};
}

inline std::pair<RootedTree, Coloring> build(int i, int j,
                                             long long vertex_budget = kDefaultVertexBudget) {
  auto result = build_detailed(i, j, vertex_budget);
  return {std::move(result.tree), std::move(result.coloring)};
}

// Exact rational, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational&) const = default;
};

// Extra-branch count t = floor((1/alpha - 2) * i) + 2, evaluated exactly over
// integers, chosen so that strength / max-degree lands on alpha (exactly when
// alpha.num divides (alpha.den - 2*alpha.num) * i, from above otherwise).
inline long long ratio_copy_count(int i, Rational alpha) {
  if (alpha.num <= 0 || 2 * alpha.num >= alpha.den)
    throw input_error("alpha must lie strictly between 0 and 1/2");
  return detail::mul_checked_ll(alpha.den - 2 * alpha.num, i) / alpha.num + 2;
}

struct RatioBuild {
  RootedTree tree;
  Coloring coloring;
  long long t = 0;
};

// T_i^1 with t extra copies of T_{i-1}^1 appended under the root after the
// original children; root degree becomes 2i-2+t while the strength stays i.
inline RatioBuild build_ratio_tree(int i, Rational alpha,
                                   long long vertex_budget = kDefaultVertexBudget) {
  if (i < 2) throw input_error("ratio trees require i >= 2");
  const long long t = ratio_copy_count(i, alpha);
  const auto base = stats_only(i, 1);
  const auto extra = stats_only(i - 1, 1);
  const long long total =
      detail::add_checked_ll(base.n, detail::mul_checked_ll(t, extra.n));
  if (total > vertex_budget)
    throw resource_error("ratio tree for i=" + std::to_string(i) + " needs " +
                         std::to_string(total) + " vertices, over the budget of " +
                         std::to_string(vertex_budget));
  if (total > std::numeric_limits<int>::max())
    throw resource_error("tree size exceeds the representable range");

  std::vector<int> parent;
  Coloring colors;
  parent.reserve(total);
  colors.reserve(total);
  parent.push_back(kNil);
  colors.push_back(i);
  for (int k = 1; k <= i - 1; ++k) {
    const int m = detail::copy_second_index(i, 1, k);
    detail::emit_subtree(k, m, 0, parent, colors);
    detail::emit_subtree(k, m, 0, parent, colors);
  }
  for (long long c = 0; c < t; ++c) detail::emit_subtree(i - 1, 1, 0, parent, colors);
  assert(static_cast<long long>(parent.size()) == total);
  return RatioBuild{RootedTree(std::move(parent)), std::move(colors), t};
}

}  // namespace sumtree
