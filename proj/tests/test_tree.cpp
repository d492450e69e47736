#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "support.hpp"
#include "sumtree/tree.hpp"

using namespace sumtree;
using testsupport::make_path;
using testsupport::make_star;

namespace {
std::vector<int> kids(const RootedTree& tree, int v) {
  const auto span = tree.children(v);
  return {span.begin(), span.end()};
}
}  // namespace

TEST_CASE("single vertex") {
  const RootedTree tree({kNil});
  CHECK(tree.n() == 1);
  CHECK(tree.root() == 0);
  CHECK(tree.parent(0) == kNil);
  CHECK(tree.children(0).empty());
  CHECK(tree.degree(0) == 0);
  CHECK(tree.preorder() == std::vector<int>{0});
}

TEST_CASE("path structure") {
  const RootedTree tree = make_path(4);
  CHECK(tree.root() == 0);
  CHECK(tree.parent(3) == 2);
  CHECK(tree.degree(0) == 1);
  CHECK(tree.degree(1) == 2);
  CHECK(tree.degree(3) == 1);
  CHECK(tree.preorder() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("root can sit anywhere") {
  // 2 is the root; 0 and 1 hang under 3 which hangs under 2.
  const RootedTree tree({3, 3, kNil, 2});
  CHECK(tree.root() == 2);
  CHECK(kids(tree, 3) == std::vector<int>{0, 1});
  CHECK(tree.degree(3) == 3);
  CHECK(tree.preorder().front() == 2);
}

TEST_CASE("children are sorted ascending") {
  const RootedTree tree({kNil, 0, 0, 0, 2, 2});
  CHECK(kids(tree, 0) == std::vector<int>{1, 2, 3});
  CHECK(kids(tree, 2) == std::vector<int>{4, 5});
  CHECK(tree.child_count(0) == 3);
}

TEST_CASE("preorder visits parents before children") {
  const RootedTree tree({kNil, 0, 0, 1, 1, 2});
  const auto order = tree.preorder();
  std::vector<int> position(tree.n());
  for (int idx = 0; idx < tree.n(); ++idx) position[order[idx]] = idx;
  for (int v = 0; v < tree.n(); ++v)
    if (v != tree.root()) CHECK(position[tree.parent(v)] < position[v]);
}

TEST_CASE("equality compares shape") {
  CHECK(make_path(3) == make_path(3));
  CHECK_FALSE(make_path(3) == make_star(3));
}

TEST_CASE("invalid parent arrays are rejected") {
  CHECK_THROWS_AS(RootedTree({}), input_error);
  CHECK_THROWS_AS(RootedTree({0}), input_error);            // self-loop, no root
  CHECK_THROWS_AS(RootedTree({kNil, kNil}), input_error);   // two roots
  CHECK_THROWS_AS(RootedTree({kNil, 5}), input_error);      // out of range
  CHECK_THROWS_AS(RootedTree({kNil, 1}), input_error);      // self-loop
  CHECK_THROWS_AS(RootedTree({kNil, 2, 1}), input_error);   // 2-cycle off the root
  CHECK_THROWS_AS(RootedTree({kNil, 0, 3, 2}), input_error);  // disconnected cycle
}

TEST_CASE("coloring sums and properness") {
  const RootedTree tree = make_path(4);
  CHECK(coloring_sum({1}) == 1);
  CHECK(coloring_sum({1, 2, 1, 2}) == 6);
  CHECK(is_proper(tree, {1, 2, 1, 2}));
  CHECK_FALSE(is_proper(tree, {1, 1, 2, 1}));
  CHECK_FALSE(is_proper(make_path(3), {1, 1, 1}));
  CHECK_THROWS_AS(is_proper(tree, {1, 2, 1}), input_error);       // wrong length
  CHECK_THROWS_AS(validate_coloring(tree, {1, 2, 0, 2}), input_error);  // color < 1
  CHECK_NOTHROW(validate_coloring(tree, {1, 2, 1, 2}));
}

TEST_CASE("stats for a single vertex") {
  const auto stats = tree_stats(RootedTree({kNil}));
  CHECK(stats.max_degree == 0);
  CHECK(stats.max_degree_vertices == std::vector<int>{0});
  CHECK(stats.chromatic_number == 1);
  CHECK(stats.szekeres_wilf == 1);
}

TEST_CASE("stats for nontrivial trees") {
  const auto path = tree_stats(make_path(5));
  CHECK(path.max_degree == 2);
  CHECK(path.max_degree_vertices == std::vector<int>{1, 2, 3});
  CHECK(path.chromatic_number == 2);
  CHECK(path.szekeres_wilf == 2);

  const auto star = tree_stats(make_star(7));
  CHECK(star.max_degree == 6);
  CHECK(star.max_degree_vertices == std::vector<int>{0});
  CHECK(star.szekeres_wilf == 2);
}
