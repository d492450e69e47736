// sumtree: exact minimum-sum coloring toolkit for trees.
//
// Machine-readable output (JSON / DOT / CSV) goes to standard output,
// diagnostics to standard error. Exit codes: 0 success or all checks pass,
// 1 a verification check failed, 2 usage or input error, 3 resource budget
// exceeded.

#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "sumtree/sumtree.hpp"

namespace {

long long parse_positive_ll(std::string_view text, const std::string& what) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
    throw sumtree::input_error(what + " must be a positive integer, got '" +
                               std::string(text) + "'");
  return value;
}

// Strict P/Q with positive integers on both sides, kept exact.
sumtree::Rational parse_alpha(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || text.find('/', slash + 1) != std::string::npos)
    throw sumtree::input_error("--alpha must be P/Q, got '" + text + "'");
  const long long num = parse_positive_ll(std::string_view(text).substr(0, slash),
                                          "--alpha numerator");
  const long long den = parse_positive_ll(std::string_view(text).substr(slash + 1),
                                          "--alpha denominator");
  return sumtree::Rational{num, den};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sumtree::input_error("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw sumtree::input_error("cannot open output file '" + out_path + "'");
  out << bytes;
  if (!out) throw sumtree::input_error("write to '" + out_path + "' failed");
}

std::string render_tree(const sumtree::RootedTree& tree,
                        const sumtree::Coloring& coloring,
                        const std::string& format) {
  if (format == "dot") return sumtree::to_dot(tree, &coloring);
  return sumtree::to_json(tree, &coloring) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimum-sum coloring toolkit for trees"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "emit the canonical tree for an index pair");
  int gen_i = 1, gen_j = 1;
  bool gen_stats = false;
  std::string gen_format = "json", gen_out;
  long long gen_budget = sumtree::kDefaultVertexBudget;
  gen->add_option("--i", gen_i, "first index (root color)")->required();
  gen->add_option("--j", gen_j, "second index (forced-root gap)")->required();
  gen->add_flag("--stats-only", gen_stats,
                "print size, sum, and degree data without building the tree");
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--out", gen_out, "write to this file instead of standard output");
  gen->add_option("--vertex-budget", gen_budget, "largest tree the build may produce");

  auto* genr = app.add_subcommand(
      "gen-cor2", "emit the padded tree driving strength/degree to alpha");
  int genr_i = 2;
  std::string genr_alpha;
  bool genr_stats = false;
  std::string genr_format = "json", genr_out;
  long long genr_budget = sumtree::kDefaultVertexBudget;
  genr->add_option("--i", genr_i, "strength of the padded tree")->required();
  genr->add_option("--alpha", genr_alpha, "target ratio as P/Q")->required();
  genr->add_flag("--stats-only", genr_stats,
                 "print size and degree data without building the tree");
  genr->add_option("--format", genr_format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  genr->add_option("--out", genr_out, "write to this file instead of standard output");
  genr->add_option("--vertex-budget", genr_budget, "largest tree the build may produce");

  auto* solve_cmd = app.add_subcommand("solve", "solve a tree given as JSON");
  std::string solve_file;
  bool solve_brute_flag = false;
  int solve_forced = 0;
  long long solve_limit = 0;
  solve_cmd->add_option("file", solve_file, "tree JSON file")->required();
  solve_cmd->add_flag("--brute", solve_brute_flag,
                      "use the exhaustive reference solver (small trees only)");
  solve_cmd->add_option("--forced-root", solve_forced,
                        "also report the least sum with the root pinned to this color")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--enumerate", solve_limit,
                        "also list minimal colorings, up to this many")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd =
      app.add_subcommand("verify", "re-check the family's properties for all pairs");
  int verify_max_sum = 0, verify_jobs = 1;
  long long verify_budget = sumtree::kDefaultVertexBudget;
  std::string verify_format = "text";
  verify_cmd->add_option("--max-sum", verify_max_sum, "verify pairs with i+j up to this")
      ->required();
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
  verify_cmd->add_option("--vertex-budget", verify_budget,
                         "skip pairs whose tree exceeds this many vertices");
  verify_cmd->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* seq = app.add_subcommand("sequence", "tabulate the strength/degree ratio rows");
  std::string seq_alpha;
  int seq_imax = 2;
  std::string seq_format = "csv";
  long long seq_budget = sumtree::kDefaultVertexBudget;
  seq->add_option("--alpha", seq_alpha, "target ratio as P/Q")->required();
  seq->add_option("--imax", seq_imax, "last row index")->required();
  seq->add_option("--format", seq_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  seq->add_option("--vertex-budget", seq_budget,
                  "skip rows whose tree exceeds this many vertices");

  auto* rnd = app.add_subcommand("random", "generate or check uniform random trees");
  int rnd_n = 1, rnd_count = 1;
  std::uint64_t rnd_seed = 0;
  bool rnd_check = false;
  std::string rnd_format = "text";
  rnd->add_option("--n", rnd_n, "vertex count (ceiling when checking)")->required();
  rnd->add_option("--count", rnd_count, "number of trees / trials")->required();
  rnd->add_option("--seed", rnd_seed, "base seed; trial t uses seed+t");
  rnd->add_flag("--check", rnd_check,
                "check the strength bound and cross-check the solver instead of printing");
  rnd->add_option("--format", rnd_format, "check-report format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (gen_stats) {
        const auto entry = sumtree::stats_only(gen_i, gen_j);
        nlohmann::ordered_json out;
        out["format"] = "sumtree-stats-v1";
        out["i"] = gen_i;
        out["j"] = gen_j;
        out["n"] = entry.n;
        out["sigma_f"] = entry.sigma_f;
        out["max_degree"] = entry.max_degree;
        out["strength"] = entry.expected.strength;
        out["max_color"] = entry.expected.max_color;
        out["root_color"] = entry.expected.root_color;
        out["gap"] = entry.expected.gap;
        write_output(gen_out, out.dump() + "\n");
      } else {
        const auto [tree, coloring] = sumtree::build(gen_i, gen_j, gen_budget);
        write_output(gen_out, render_tree(tree, coloring, gen_format));
      }
      return 0;
    }

    if (genr->parsed()) {
      const auto alpha = parse_alpha(genr_alpha);
      if (genr_stats) {
        if (genr_i < 2) throw sumtree::input_error("ratio trees require i >= 2");
        const long long t = sumtree::ratio_copy_count(genr_i, alpha);
        const auto base = sumtree::stats_only(genr_i, 1);
        const auto extra = sumtree::stats_only(genr_i - 1, 1);
        nlohmann::ordered_json out;
        out["format"] = "sumtree-stats-v1";
        out["i"] = genr_i;
        out["alpha"] = sumtree::rational_string(alpha);
        out["t"] = t;
        out["n"] = sumtree::detail::add_checked_ll(
            base.n, sumtree::detail::mul_checked_ll(t, extra.n));
        out["max_degree"] = 2LL * genr_i - 2 + t;
        out["strength"] = genr_i;
        write_output(genr_out, out.dump() + "\n");
      } else {
        const auto built = sumtree::build_ratio_tree(genr_i, alpha, genr_budget);
        std::cerr << "note: t=" << built.t << " extra branches\n";
        write_output(genr_out, render_tree(built.tree, built.coloring, genr_format));
      }
      return 0;
    }

    if (solve_cmd->parsed()) {
      const auto parsed = sumtree::parse_json(read_file(solve_file));
      const sumtree::RootedTree& tree = parsed.tree;
      const sumtree::SolveReport report =
          solve_brute_flag ? sumtree::solve_brute(tree) : sumtree::solve(tree);
      nlohmann::ordered_json out;
      out["format"] = "sumtree-solve-v1";
      out["n"] = tree.n();
      out["solver"] = solve_brute_flag ? "brute" : "dp";
      out["sigma"] = report.sigma;
      out["strength"] = report.strength;
      out["count"] = report.count.value;
      out["count_saturated"] = report.count.saturated;
      out["witness"] = report.witness;
      if (solve_forced > 0) {
        nlohmann::ordered_json forced;
        forced["color"] = solve_forced;
        forced["min_sum"] = sumtree::forced_root_min_sum(tree, solve_forced);
        out["forced_root"] = std::move(forced);
      }
      if (solve_limit > 0) {
        const auto every = sumtree::enumerate_minimal(tree, solve_limit);
        nlohmann::ordered_json listing;
        listing["limit"] = solve_limit;
        listing["truncated"] = every.truncated;
        listing["colorings"] = every.colorings;
        out["minimal_colorings"] = std::move(listing);
      }
      write_output("", out.dump() + "\n");
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto report =
          sumtree::verify_all(verify_max_sum, verify_jobs, verify_budget);
      if (verify_format == "json")
        write_output("", sumtree::verdicts_to_json(report).dump() + "\n");
      else
        write_output("", sumtree::verdicts_to_text(report));
      return report.all_pass ? 0 : 1;
    }

    if (seq->parsed()) {
      const auto report =
          sumtree::sequence_report(parse_alpha(seq_alpha), seq_imax, seq_budget);
      if (seq_format == "json")
        write_output("", sumtree::sequence_to_json(report).dump() + "\n");
      else
        write_output("", sumtree::sequence_to_csv(report));
      return report.all_ok ? 0 : 1;
    }

    if (rnd->parsed()) {
      if (rnd_check) {
        const auto report = sumtree::verify_bounds_random(rnd_count, rnd_n, rnd_seed);
        if (rnd_format == "json")
          write_output("", sumtree::random_bounds_to_json(report).dump() + "\n");
        else
          write_output("", sumtree::random_bounds_to_text(report));
        return report.ok ? 0 : 1;
      }
      if (rnd_count < 1) throw sumtree::input_error("--count must be >= 1");
      std::string out;
      for (int t = 0; t < rnd_count; ++t) {
        const auto tree =
            sumtree::random_tree(rnd_n, rnd_seed + static_cast<std::uint64_t>(t));
        out += sumtree::to_json(tree) + "\n";
      }
      write_output("", out);
      return 0;
    }
  } catch (const sumtree::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sumtree::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
