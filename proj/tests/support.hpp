#pragma once

// Shared helpers for the test binaries: tiny tree factories, a widened-box
// exhaustive enumerator used as an independent oracle, and a harness that
// spawns the command-line binary.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sumtree/sumtree.hpp"

namespace testsupport {

inline sumtree::RootedTree make_path(int n) {
  std::vector<int> parent(n);
  parent[0] = sumtree::kNil;
  for (int v = 1; v < n; ++v) parent[v] = v - 1;
  return sumtree::RootedTree(std::move(parent));
}

// Vertex 0 is the center.
inline sumtree::RootedTree make_star(int n) {
  std::vector<int> parent(n, 0);
  parent[0] = sumtree::kNil;
  return sumtree::RootedTree(std::move(parent));
}

// All minimum-sum colorings found by exhaustive search over widened boxes
// 1..deg(v)+1+slack. With slack > 0 this does not presuppose the color-box
// property, so it can certify it.
struct WideEnumeration {
  sumtree::Sum sigma = 0;
  std::vector<sumtree::Coloring> colorings;  // lexicographic order
};

inline WideEnumeration wide_box_minimal(const sumtree::RootedTree& tree, int slack) {
  const int n = tree.n();
  std::vector<std::vector<int>> lower(n);
  for (int v = 0; v < n; ++v) {
    if (v == tree.root()) continue;
    const int p = tree.parent(v);
    lower[std::max(v, p)].push_back(std::min(v, p));
  }
  std::vector<int> box(n);
  for (int v = 0; v < n; ++v) box[v] = tree.degree(v) + 1 + slack;

  WideEnumeration out;
  out.sigma = std::numeric_limits<sumtree::Sum>::max();
  std::vector<int> color(n, 0);
  int pos = 0;
  sumtree::Sum sum = 0;
  while (pos >= 0) {
    ++color[pos];
    if (color[pos] > box[pos]) {
      color[pos] = 0;
      --pos;
      if (pos >= 0) sum -= color[pos];
      continue;
    }
    bool clash = false;
    for (int u : lower[pos]) clash = clash || color[u] == color[pos];
    if (clash) continue;
    if (pos == n - 1) {
      const sumtree::Sum total = sum + color[pos];
      if (total < out.sigma) {
        out.sigma = total;
        out.colorings.clear();
        out.colorings.push_back(color);
      } else if (total == out.sigma) {
        out.colorings.push_back(color);
      }
      continue;
    }
    sum += color[pos];
    ++pos;
  }
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void spit(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the built binary with the given argument string; stdout/stderr are
// captured via temp files. Arguments must not need shell quoting.
inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string base = "/tmp/sumtree_cli_" + std::to_string(::getpid()) + "_" +
                           std::to_string(counter++);
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  const std::string cmd = std::string(SUMTREE_CLI_PATH) + " " + args + " >" +
                          out_path + " 2>" + err_path;
  const int rc = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = rc == -1 ? 127 : WEXITSTATUS(rc);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace testsupport
