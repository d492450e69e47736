#pragma once

// Rooted-tree model and colorings: the universe every other header acts on.
// Trees are immutable after construction and safe to share across threads.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumtree {

// Thrown on malformed caller input (bad sizes, bad flags, out-of-domain args).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when parsing serialized bytes fails; the message names the field.
struct parse_error : input_error {
  using input_error::input_error;
};

// Thrown when a request exceeds a configured budget or hard cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kNil = -1;

using Sum = std::int64_t;

// Color sequence indexed by vertex id; entries are >= 1 for valid colorings.
using Coloring = std::vector<int>;

// Sums of colors stay far below 2^63 at any size a budget admits, but debug
// builds still verify every addition.
inline Sum checked_add(Sum a, Sum b) {
#ifndef NDEBUG
  Sum r = 0;
  assert(!__builtin_add_overflow(a, b, &r) && "sum overflow");
  return r;
#else
  return a + b;
#endif
}

inline Sum checked_mul(Sum a, Sum b) {
#ifndef NDEBUG
  Sum r = 0;
  assert(!__builtin_mul_overflow(a, b, &r) && "product overflow");
  return r;
#else
  return a * b;
#endif
}

// Immutable rooted tree over vertex ids 0..n-1.
//
// The parent vector fully determines the tree: exactly one entry is kNil and
// that vertex is the root. Children are kept in ascending id order, which for
// trees generated by this library coincides with construction order (ids are
// assigned in depth-first preorder).
class RootedTree {
 public:
  explicit RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
    const int n = static_cast<int>(parent_.size());
    if (n < 1) throw input_error("tree must have at least one vertex");
    root_ = kNil;
    for (int v = 0; v < n; ++v) {
      const int p = parent_[v];
      if (p == kNil) {
        if (root_ != kNil) throw input_error("more than one root in parent vector");
        root_ = v;
      } else if (p < 0 || p >= n) {
        throw input_error("parent id out of range at vertex " + std::to_string(v));
      } else if (p == v) {
        throw input_error("vertex " + std::to_string(v) + " is its own parent");
      }
    }
    if (root_ == kNil) throw input_error("no root in parent vector");

    // Children in ascending id order via counting sort on parent ids.
    child_off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
      if (v != root_) ++child_off_[parent_[v] + 1];
    for (int v = 0; v < n; ++v) child_off_[v + 1] += child_off_[v];
    child_list_.resize(n - 1);
    std::vector<int> fill(child_off_.begin(), child_off_.end() - 1);
    for (int v = 0; v < n; ++v)
      if (v != root_) child_list_[fill[parent_[v]]++] = v;

    // Iterative preorder; reaching all n vertices proves connectivity and
    // acyclicity in one traversal.
    preorder_.reserve(n);
    std::vector<int> stack{root_};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      preorder_.push_back(v);
      const auto kids = children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    if (static_cast<int>(preorder_.size()) != n)
      throw input_error("parent links do not connect all vertices");
  }

  int n() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parents() const { return parent_; }

  std::span<const int> children(int v) const {
    return {child_list_.data() + child_off_[v],
            static_cast<std::size_t>(child_off_[v + 1] - child_off_[v])};
  }

  int child_count(int v) const { return child_off_[v + 1] - child_off_[v]; }

  // Undirected degree: children plus the parent edge for non-roots.
  int degree(int v) const { return child_count(v) + (v == root_ ? 0 : 1); }

  // Root-first order with every parent before its children.
  const std::vector<int>& preorder() const { return preorder_; }

  bool operator==(const RootedTree& other) const { return parent_ == other.parent_; }

 private:
  std::vector<int> parent_;
  int root_ = kNil;
  std::vector<int> child_off_;
  std::vector<int> child_list_;
  std::vector<int> preorder_;
};

inline Sum coloring_sum(const Coloring& coloring) {
  Sum total = 0;
  for (int c : coloring) total = checked_add(total, c);
  return total;
}

inline bool is_proper(const RootedTree& tree, const Coloring& coloring) {
  if (static_cast<int>(coloring.size()) != tree.n())
    throw input_error("coloring length does not match vertex count");
  for (int v = 0; v < tree.n(); ++v)
    if (v != tree.root() && coloring[v] == coloring[tree.parent(v)]) return false;
  return true;
}

// Length and positivity check for externally supplied colorings.
inline void validate_coloring(const RootedTree& tree, const Coloring& coloring) {
  if (static_cast<int>(coloring.size()) != tree.n())
    throw input_error("coloring length does not match vertex count");
  for (std::size_t v = 0; v < coloring.size(); ++v)
    if (coloring[v] < 1)
      throw input_error("coloring entry below 1 at vertex " + std::to_string(v));
}

struct TreeStats {
  int max_degree = 0;
  std::vector<int> max_degree_vertices;  // ascending vertex ids
  int chromatic_number = 1;              // 1 iff n == 1, else 2
  int szekeres_wilf = 1;                 // equals chromatic_number on trees
};

inline TreeStats tree_stats(const RootedTree& tree) {
  TreeStats stats;
  for (int v = 0; v < tree.n(); ++v) {
    const int d = tree.degree(v);
    if (d > stats.max_degree) {
      stats.max_degree = d;
      stats.max_degree_vertices.clear();
    }
    if (d == stats.max_degree) stats.max_degree_vertices.push_back(v);
  }
  stats.chromatic_number = tree.n() == 1 ? 1 : 2;
  stats.szekeres_wilf = stats.chromatic_number;
  return stats;
}

}  // namespace sumtree
