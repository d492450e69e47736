#pragma once

// Mechanical re-checking of the family's advertised properties, randomized
// cross-validation of the solver against exhaustive search, and the
// strength-vs-degree ratio sequence.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sumtree/construct.hpp"
#include "sumtree/io.hpp"
#include "sumtree/random.hpp"
#include "sumtree/solve.hpp"
#include "sumtree/tree.hpp"

namespace sumtree {

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::ordered_json actual;
  nlohmann::ordered_json expected;
};

struct VerdictReport {
  PairIndex pair;
  bool skipped = false;
  std::string skip_reason;
  long long n = 0;
  Sum sigma = 0;
  std::vector<CheckResult> checks;
  bool all_pass = true;
  nlohmann::ordered_json counterexample;  // null unless some check failed
};

// Runs every per-pair check on T_i^j:
//   f_proper_root_color  the canonical coloring is proper with f(root) = i
//   sigma_equals_sum_f   the solver optimum equals the canonical sum
//   unique_minimal       exactly one minimal coloring exists and it is f
//   forced_root_gaps     re-coloring the root costs at least j extra
//   max_degree_argmax    the degree peak value and who attains it
//   max_color            f uses colors up to i+j-1
//   strength             fewest colors over minimal colorings is i+j-1
inline VerdictReport verify_pair(int i, int j,
                                 long long vertex_budget = kDefaultVertexBudget) {
  VerdictReport r;
  r.pair = {i, j};
  const auto entry = stats_only(i, j);
  r.n = entry.n;
  r.sigma = entry.sigma_f;
  if (entry.n > vertex_budget) {
    r.skipped = true;
    r.skip_reason = "needs " + std::to_string(entry.n) +
                    " vertices, over the budget of " + std::to_string(vertex_budget);
    return r;
  }

  const auto built = build_detailed(i, j, vertex_budget);
  const RootedTree& tree = built.tree;
  const Coloring& f = built.coloring;
  const ExpectedProps expected = entry.expected;
  const SolveReport report = solve(tree);
  const TreeStats stats = tree_stats(tree);

  auto add = [&r](std::string name, bool pass, nlohmann::ordered_json actual,
                  nlohmann::ordered_json want) {
    r.all_pass = r.all_pass && pass;
    r.checks.push_back({std::move(name), pass, std::move(actual), std::move(want)});
  };

  {
    const bool proper = is_proper(tree, f);
    const int root_color = f[tree.root()];
    add("f_proper_root_color", proper && root_color == expected.root_color,
        {{"proper", proper}, {"root_color", root_color}},
        {{"proper", true}, {"root_color", expected.root_color}});
  }

  {
    const Sum sum_f = coloring_sum(f);
    add("sigma_equals_sum_f", report.sigma == sum_f && sum_f == entry.sigma_f,
        {{"sigma", report.sigma}, {"sum_f", sum_f}},
        {{"sigma", entry.sigma_f}, {"sum_f", entry.sigma_f}});
  }

  {
    const bool unique = report.count == SatCount::one();
    const bool matches = report.witness == f;
    add("unique_minimal", unique && matches,
        {{"count", report.count.value},
         {"count_saturated", report.count.saturated},
         {"witness_is_f", matches}},
        {{"count", 1}, {"count_saturated", false}, {"witness_is_f", true}});
  }

  {
    std::vector<int> colors;
    const long long hi = std::max<long long>(i + j, stats.max_degree + 1) + 1;
    for (long long c = 1; c <= hi; ++c)
      if (c != i) colors.push_back(static_cast<int>(c));
    const auto sums = detail::forced_root_min_sums(tree, colors);
    Sum min_gap = detail::kInfSum;
    std::vector<int> tight;  // colors whose penalty is exactly j
    bool pass = true;
    for (std::size_t idx = 0; idx < colors.size(); ++idx) {
      const Sum gap = sums[idx] - report.sigma;
      pass = pass && gap >= expected.gap;
      min_gap = std::min(min_gap, gap);
      if (gap == expected.gap) tight.push_back(colors[idx]);
    }
    add("forced_root_gaps", pass,
        {{"min_gap", min_gap}, {"tight_colors", tight}},
        {{"min_gap_at_least", expected.gap}});
  }

  {
    std::vector<int> named;
    if (j == 1) {
      named.push_back(tree.root());
    } else {
      for (const auto& top : built.top_children)
        if (top.k == i + j - 1) named = {top.root_a, top.root_b};
    }
    assert(!named.empty());
    bool named_in_argmax = true;
    for (int v : named)
      named_in_argmax =
          named_in_argmax && std::binary_search(stats.max_degree_vertices.begin(),
                                                stats.max_degree_vertices.end(), v);
    const auto extra_ties =
        static_cast<long long>(stats.max_degree_vertices.size()) -
        static_cast<long long>(named.size());
    add("max_degree_argmax",
        stats.max_degree == expected.max_degree && named_in_argmax,
        {{"max_degree", stats.max_degree},
         {"named_vertices", named},
         {"named_in_argmax", named_in_argmax},
         {"extra_ties", extra_ties}},
        {{"max_degree", expected.max_degree}, {"named_in_argmax", true}});
  }

  {
    const int max_color = *std::max_element(f.begin(), f.end());
    add("max_color", max_color == expected.max_color,
        {{"max_color", max_color}}, {{"max_color", expected.max_color}});
  }

  add("strength", report.strength == expected.strength,
      {{"strength", report.strength}}, {{"strength", expected.strength}});

  if (!r.all_pass)
    r.counterexample = nlohmann::ordered_json::parse(to_json(tree, &f));
  return r;
}

struct VerifyAllReport {
  int max_sum = 0;
  long long vertex_budget = 0;
  std::vector<VerdictReport> verdicts;  // ascending (i+j, j)
  int pairs_checked = 0;
  int pairs_skipped = 0;
  bool all_pass = true;
};

// Verifies every pair with i+j <= max_sum. Work is strided across jobs
// threads; verdict order and content are independent of the thread count.
inline VerifyAllReport verify_all(int max_sum, int jobs = 1,
                                  long long vertex_budget = kDefaultVertexBudget) {
  if (max_sum < 2) throw input_error("max-sum must be >= 2");
  if (jobs < 1) throw input_error("jobs must be >= 1");

  VerifyAllReport out;
  out.max_sum = max_sum;
  out.vertex_budget = vertex_budget;
  std::vector<PairIndex> pairs;
  for (int s = 2; s <= max_sum; ++s)
    for (int l = 1; l <= s - 1; ++l) pairs.push_back({s - l, l});
  out.verdicts.resize(pairs.size());

  (void)stats_only(max_sum - 1, 1);  // fill the shared size table up front

  const int workers = std::min<int>(jobs, static_cast<int>(pairs.size()));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int t) {
    try {
      for (std::size_t idx = t; idx < pairs.size(); idx += workers)
        out.verdicts[idx] =
            verify_pair(pairs[idx].i, pairs[idx].j, vertex_budget);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const auto& v : out.verdicts) {
    if (v.skipped) {
      ++out.pairs_skipped;
    } else {
      ++out.pairs_checked;
      out.all_pass = out.all_pass && v.all_pass;
    }
  }
  return out;
}

struct RandomBoundsReport {
  int trials = 0;
  int max_n = 0;
  std::uint64_t seed = 0;
  int bound_checked = 0;
  int bound_violations = 0;
  int brute_checked = 0;
  int brute_mismatches = 0;
  Rational max_ratio{0, 1};  // largest strength / bound seen
  std::vector<std::string> failures;  // detail lines, capped
  bool ok = true;
};

// Trial t draws a uniform tree on 1 + (t mod max_n) vertices with seed
// seed + t, checks strength <= ceil((w + max_degree) / 2) on every tree with
// n >= 2, and cross-checks the full solver report against exhaustive search
// when n <= brute_max_n.
inline RandomBoundsReport verify_bounds_random(int trials, int max_n,
                                               std::uint64_t seed,
                                               int brute_max_n = 10) {
  if (trials < 1) throw input_error("trials must be >= 1");
  if (max_n < 1) throw input_error("max-n must be >= 1");
  constexpr std::size_t kMaxFailureLines = 8;

  RandomBoundsReport out;
  out.trials = trials;
  out.max_n = max_n;
  out.seed = seed;
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % max_n;
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    const RootedTree tree = random_tree(n, trial_seed);
    const SolveReport rep = solve(tree);
    if (n >= 2) {
      const TreeStats stats = tree_stats(tree);
      const int bound =
          static_cast<int>((stats.szekeres_wilf + stats.max_degree + 1) / 2);
      ++out.bound_checked;
      if (rep.strength > bound) {
        ++out.bound_violations;
        if (out.failures.size() < kMaxFailureLines)
          out.failures.push_back("trial " + std::to_string(t) + ": n=" +
                                 std::to_string(n) + " seed=" +
                                 std::to_string(trial_seed) + " strength " +
                                 std::to_string(rep.strength) + " > bound " +
                                 std::to_string(bound));
      }
      const Rational ratio{rep.strength, bound};
      if (ratio.num * out.max_ratio.den > out.max_ratio.num * ratio.den)
        out.max_ratio = ratio;
    }
    if (n <= brute_max_n) {
      const SolveReport ref = solve_brute(tree);
      ++out.brute_checked;
      const bool same = rep.sigma == ref.sigma && rep.strength == ref.strength &&
                        rep.count == ref.count && rep.witness == ref.witness;
      if (!same) {
        ++out.brute_mismatches;
        if (out.failures.size() < kMaxFailureLines)
          out.failures.push_back("trial " + std::to_string(t) + ": n=" +
                                 std::to_string(n) + " seed=" +
                                 std::to_string(trial_seed) +
                                 " solver disagrees with exhaustive search");
      }
    }
  }
  out.ok = out.bound_violations == 0 && out.brute_mismatches == 0;
  return out;
}

struct SequenceRow {
  int i = 0;
  long long t = -1;  // -1 when the count overflows
  long long n = -1;  // -1 when the size overflows
  bool skipped = false;
  int strength = 0;
  long long max_degree = 0;
  Rational ratio{0, 1};
  bool ok = false;
};

struct SequenceReport {
  Rational alpha;
  int imax = 0;
  long long vertex_budget = 0;
  std::vector<SequenceRow> rows;  // i = 2..imax
  bool all_ok = true;             // over rows actually built
};

// One row per i: the padded tree's strength must stay i while the max degree
// grows to 2i-2+t, driving strength / max_degree to alpha. Rows whose tree
// exceeds the vertex budget are marked skipped and carry sizes only.
inline SequenceReport sequence_report(Rational alpha, int imax,
                                      long long vertex_budget = kDefaultVertexBudget) {
  if (imax < 2) throw input_error("imax must be >= 2");
  (void)ratio_copy_count(2, alpha);  // reject out-of-range alpha up front

  SequenceReport out;
  out.alpha = alpha;
  out.imax = imax;
  out.vertex_budget = vertex_budget;
  for (int i = 2; i <= imax; ++i) {
    SequenceRow row;
    row.i = i;
    try {
      row.t = ratio_copy_count(i, alpha);
      row.n = detail::add_checked_ll(
          stats_only(i, 1).n, detail::mul_checked_ll(row.t, stats_only(i - 1, 1).n));
    } catch (const resource_error&) {
      row.skipped = true;
      out.rows.push_back(row);
      continue;
    }
    if (row.n > vertex_budget) {
      row.skipped = true;
      out.rows.push_back(row);
      continue;
    }
    const auto built = build_ratio_tree(i, alpha, vertex_budget);
    const SolveReport rep = solve(built.tree);
    const TreeStats stats = tree_stats(built.tree);
    row.strength = rep.strength;
    row.max_degree = stats.max_degree;
    row.ratio = Rational(rep.strength, stats.max_degree);
    row.ok = rep.strength == i && stats.max_degree == 2LL * i - 2 + row.t;
    out.all_ok = out.all_ok && row.ok;
    out.rows.push_back(row);
  }
  return out;
}

inline std::string rational_string(Rational r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline std::string ratio_decimal(Rational r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(r.num) / static_cast<double>(r.den));
  return buf;
}

inline nlohmann::ordered_json verdicts_to_json(const VerifyAllReport& report) {
  nlohmann::ordered_json root;
  root["format"] = "sumtree-verify-v1";
  root["max_sum"] = report.max_sum;
  root["vertex_budget"] = report.vertex_budget;
  root["pairs_checked"] = report.pairs_checked;
  root["pairs_skipped"] = report.pairs_skipped;
  root["all_pass"] = report.all_pass;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    nlohmann::ordered_json item;
    item["i"] = v.pair.i;
    item["j"] = v.pair.j;
    item["n"] = v.n;
    item["skipped"] = v.skipped;
    if (v.skipped) {
      item["reason"] = v.skip_reason;
    } else {
      item["sigma"] = v.sigma;
      item["all_pass"] = v.all_pass;
      auto checks = nlohmann::ordered_json::array();
      for (const auto& c : v.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"actual", c.actual},
                          {"expected", c.expected}});
      item["checks"] = std::move(checks);
      if (!v.all_pass) item["counterexample"] = v.counterexample;
    }
    verdicts.push_back(std::move(item));
  }
  root["verdicts"] = std::move(verdicts);
  return root;
}

inline std::string verdicts_to_text(const VerifyAllReport& report) {
  std::string out;
  for (const auto& v : report.verdicts) {
    out += "pair (" + std::to_string(v.pair.i) + "," + std::to_string(v.pair.j) + "): ";
    if (v.skipped) {
      out += "skipped (" + v.skip_reason + ")\n";
    } else if (v.all_pass) {
      out += "pass (n=" + std::to_string(v.n) +
             ", sigma=" + std::to_string(v.sigma) + ")\n";
    } else {
      out += "FAIL [";
      bool first = true;
      for (const auto& c : v.checks) {
        if (c.pass) continue;
        if (!first) out += ", ";
        out += c.name;
        first = false;
      }
      out += "]\n";
    }
  }
  out += "checked " + std::to_string(report.pairs_checked) + " pairs, " +
         std::to_string(report.pairs_skipped) + " skipped: ";
  out += report.all_pass ? "all pass\n" : "FAILURES\n";
  return out;
}

inline nlohmann::ordered_json random_bounds_to_json(const RandomBoundsReport& report) {
  nlohmann::ordered_json root;
  root["format"] = "sumtree-random-v1";
  root["trials"] = report.trials;
  root["max_n"] = report.max_n;
  root["seed"] = report.seed;
  root["bound_checked"] = report.bound_checked;
  root["bound_violations"] = report.bound_violations;
  root["brute_checked"] = report.brute_checked;
  root["brute_mismatches"] = report.brute_mismatches;
  root["max_ratio"] = rational_string(report.max_ratio);
  root["max_ratio_decimal"] = ratio_decimal(report.max_ratio);
  root["ok"] = report.ok;
  root["failures"] = report.failures;
  return root;
}

inline std::string random_bounds_to_text(const RandomBoundsReport& report) {
  std::string out;
  out += "trials: " + std::to_string(report.trials) +
         " (n up to " + std::to_string(report.max_n) +
         ", seed " + std::to_string(report.seed) + ")\n";
  out += "strength bound checked on " + std::to_string(report.bound_checked) +
         " trees, violations: " + std::to_string(report.bound_violations) +
         ", max strength/bound = " + rational_string(report.max_ratio) +
         " (" + ratio_decimal(report.max_ratio) + ")\n";
  out += "exhaustive cross-check on " + std::to_string(report.brute_checked) +
         " trees, mismatches: " + std::to_string(report.brute_mismatches) + "\n";
  for (const auto& line : report.failures) out += "  " + line + "\n";
  out += report.ok ? "ok\n" : "FAILURES\n";
  return out;
}

inline std::string sequence_to_csv(const SequenceReport& report) {
  std::string out = "i,t,n,strength,max_degree,ratio\n";
  for (const auto& row : report.rows) {
    if (row.skipped) continue;
    out += std::to_string(row.i) + "," + std::to_string(row.t) + "," +
           std::to_string(row.n) + "," + std::to_string(row.strength) + "," +
           std::to_string(row.max_degree) + "," + ratio_decimal(row.ratio) + "\n";
  }
  return out;
}

inline nlohmann::ordered_json sequence_to_json(const SequenceReport& report) {
  nlohmann::ordered_json root;
  root["format"] = "sumtree-sequence-v1";
  root["alpha"] = rational_string(report.alpha);
  root["imax"] = report.imax;
  root["vertex_budget"] = report.vertex_budget;
  root["all_ok"] = report.all_ok;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json item;
    item["i"] = row.i;
    item["t"] = row.t < 0 ? nlohmann::ordered_json() : nlohmann::ordered_json(row.t);
    item["n"] = row.n < 0 ? nlohmann::ordered_json() : nlohmann::ordered_json(row.n);
    item["skipped"] = row.skipped;
    if (!row.skipped) {
      item["strength"] = row.strength;
      item["max_degree"] = row.max_degree;
      item["ratio"] = rational_string(row.ratio);
      item["ratio_decimal"] = ratio_decimal(row.ratio);
      item["ok"] = row.ok;
    }
    rows.push_back(std::move(item));
  }
  root["rows"] = std::move(rows);
  return root;
}

}  // namespace sumtree
