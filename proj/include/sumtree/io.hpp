#pragma once

// sumtree-v1 JSON and Graphviz DOT serialization.
//
// JSON output is canonical: fixed key order (format, n, root, parent,
// coloring), compact separators, no whitespace. Equal trees serialize to
// equal bytes.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sumtree/tree.hpp"

namespace sumtree {

inline constexpr std::string_view kFormatTag = "sumtree-v1";

inline std::string to_json(const RootedTree& tree, const Coloring* coloring = nullptr) {
  nlohmann::ordered_json j;
  j["format"] = kFormatTag;
  j["n"] = tree.n();
  j["root"] = tree.root();
  j["parent"] = tree.parents();
  if (coloring != nullptr) {
    validate_coloring(tree, *coloring);
    j["coloring"] = *coloring;
  }
  return j.dump();
}

// One node per vertex, one undirected edge per parent link.
inline std::string to_dot(const RootedTree& tree, const Coloring* coloring = nullptr) {
  if (coloring != nullptr) validate_coloring(tree, *coloring);
  std::string out = "graph sumtree {\n";
  for (int v = 0; v < tree.n(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"v" + std::to_string(v);
    if (coloring != nullptr) out += "\\nc=" + std::to_string((*coloring)[v]);
    out += "\"];\n";
  }
  for (int v = 0; v < tree.n(); ++v) {
    if (v == tree.root()) continue;
    out += "  n" + std::to_string(tree.parent(v)) + " -- n" + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

struct ParsedTree {
  RootedTree tree;
  std::optional<Coloring> coloring;
};

inline ParsedTree parse_json(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("top-level value is not an object");

  const auto require = [&](const char* key) -> const nlohmann::json& {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(std::string("missing field: ") + key);
    return *it;
  };

  const auto& fmt = require("format");
  if (!fmt.is_string() || fmt.get<std::string>() != kFormatTag)
    throw parse_error("field format: expected \"sumtree-v1\"");

  const auto& jn = require("n");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1)
    throw parse_error("field n: expected positive integer");
  const int n = jn.get<int>();

  const auto& jp = require("parent");
  if (!jp.is_array() || static_cast<int>(jp.size()) != n)
    throw parse_error("field parent: expected array of length n");
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) {
    if (!jp[v].is_number_integer())
      throw parse_error("field parent: non-integer entry at index " + std::to_string(v));
    const auto p = jp[v].get<std::int64_t>();
    if (p < kNil || p >= n)
      throw parse_error("field parent: entry out of range at index " + std::to_string(v));
    parent[v] = static_cast<int>(p);
  }

  const auto& jr = require("root");
  if (!jr.is_number_integer()) throw parse_error("field root: expected integer");
  const auto root = jr.get<std::int64_t>();
  if (root < 0 || root >= n) throw parse_error("field root: out of range");

  std::optional<Coloring> coloring;
  if (auto it = j.find("coloring"); it != j.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != n)
      throw parse_error("field coloring: expected array of length n");
    Coloring colors(n);
    for (int v = 0; v < n; ++v) {
      if (!(*it)[v].is_number_integer() || (*it)[v].get<std::int64_t>() < 1)
        throw parse_error("field coloring: entry below 1 at index " + std::to_string(v));
      colors[v] = (*it)[v].get<int>();
    }
    coloring = std::move(colors);
  }

  RootedTree tree = [&] {
    try {
      return RootedTree(std::move(parent));
    } catch (const input_error& e) {
      throw parse_error(std::string("field parent: ") + e.what());
    }
  }();
  if (tree.root() != static_cast<int>(root))
    throw parse_error("field root: does not match the NIL entry in parent");
  return ParsedTree{std::move(tree), std::move(coloring)};
}

}  // namespace sumtree
