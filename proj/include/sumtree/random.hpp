#pragma once

// Uniform random labeled trees via the Pruefer bijection.
//
// Reproducibility contract: the generator is std::mt19937_64 seeded with the
// caller's 64-bit seed, and uniform integers below a bound are drawn by
// rejection sampling on raw 64-bit outputs. std::uniform_int_distribution is
// deliberately avoided because its output is implementation-defined; mt19937_64
// and the rejection scheme below are pinned by this library's format docs, so
// a (n, seed) pair names the same tree everywhere.

#include <cstdint>
#include <random>
#include <vector>

#include "sumtree/tree.hpp"

namespace sumtree {

// Unbiased uniform draw from [0, bound) by rejecting the top partial block.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

// Uniformly random labeled tree on n vertices, rooted at vertex 0.
inline RootedTree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw input_error("random_tree requires n >= 1");
  if (n == 1) return RootedTree({kNil});

  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(uniform_below(rng, n));

  // Linear-time decode: deg counts remaining stubs, ptr scans for leaves.
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);

  // Orient all edges away from root 0.
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(n, kNil);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return RootedTree(std::move(parent));
}

}  // namespace sumtree
