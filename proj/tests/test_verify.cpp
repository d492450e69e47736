#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "support.hpp"
#include "sumtree/verify.hpp"

using namespace sumtree;

namespace {
const std::vector<std::string> kCheckNames{
    "f_proper_root_color", "sigma_equals_sum_f", "unique_minimal",
    "forced_root_gaps",    "max_degree_argmax",  "max_color",
    "strength"};
}

TEST_CASE("single pair verdicts") {
  for (const PairIndex p : {PairIndex{1, 1}, PairIndex{3, 2}, PairIndex{1, 3}}) {
    CAPTURE(p.i, p.j);
    const auto verdict = verify_pair(p.i, p.j);
    CHECK_FALSE(verdict.skipped);
    CHECK(verdict.all_pass);
    REQUIRE(verdict.checks.size() == kCheckNames.size());
    for (std::size_t idx = 0; idx < kCheckNames.size(); ++idx) {
      CHECK(verdict.checks[idx].name == kCheckNames[idx]);
      CHECK(verdict.checks[idx].pass);
    }
    CHECK(verdict.counterexample.is_null());
  }
}

TEST_CASE("verdicts carry the solved totals") {
  const auto verdict = verify_pair(3, 1);
  CHECK(verdict.all_pass);
  CHECK(verdict.n == 21);
  CHECK(verdict.sigma == 29);
}

TEST_CASE("gap check reports tight colors") {
  const auto verdict = verify_pair(1, 2);
  const auto& gaps = verdict.checks[3];
  REQUIRE(gaps.name == "forced_root_gaps");
  CHECK(gaps.actual.at("min_gap") == 2);
  // Root color i+j is the unique color forcing exactly the advertised cost.
  CHECK(gaps.actual.at("tight_colors") == nlohmann::ordered_json::array({3}));
}

TEST_CASE("degree check reports no stray ties") {
  for (const PairIndex p : {PairIndex{2, 2}, PairIndex{4, 1}}) {
    const auto verdict = verify_pair(p.i, p.j);
    const auto& deg = verdict.checks[4];
    REQUIRE(deg.name == "max_degree_argmax");
    CHECK(deg.pass);
    CHECK(deg.actual.at("extra_ties") == 0);
  }
}

TEST_CASE("budget skips are reported, not failed") {
  const auto verdict = verify_pair(4, 2, 100);
  CHECK(verdict.skipped);
  CHECK(verdict.skip_reason.find("4149") != std::string::npos);
  CHECK(verdict.all_pass);
  CHECK(verdict.checks.empty());
}

TEST_CASE("smallest sweep has the single-vertex pair only") {
  const auto report = verify_all(2);
  CHECK(report.all_pass);
  REQUIRE(report.verdicts.size() == 1);
  CHECK(report.verdicts[0].pair == PairIndex{1, 1});
}

TEST_CASE("full sweep ordering and aggregation") {
  const auto report = verify_all(4);
  CHECK(report.all_pass);
  CHECK(report.pairs_checked == 6);
  CHECK(report.pairs_skipped == 0);
  REQUIRE(report.verdicts.size() == 6);
  const std::vector<PairIndex> order{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}};
  for (std::size_t idx = 0; idx < order.size(); ++idx)
    CHECK(report.verdicts[idx].pair == order[idx]);
}

TEST_CASE("sweep output is independent of the thread count") {
  const auto one = verdicts_to_json(verify_all(6, 1)).dump();
  for (int jobs : {2, 3, 8}) {
    CAPTURE(jobs);
    CHECK(verdicts_to_json(verify_all(6, jobs)).dump() == one);
  }
}

TEST_CASE("sweep honors the budget by skipping") {
  const auto report = verify_all(6, 2, 500);
  CHECK(report.all_pass);
  CHECK(report.pairs_checked + report.pairs_skipped == 15);
  CHECK(report.pairs_skipped == 5);  // the five i+j=6 pairs exceed 500 vertices
}

TEST_CASE("sweep argument validation") {
  CHECK_THROWS_AS(verify_all(1), input_error);
  CHECK_THROWS_AS(verify_all(4, 0), input_error);
}

TEST_CASE("verdict JSON shape") {
  const auto j = verdicts_to_json(verify_all(3));
  CHECK(j.at("format") == "sumtree-verify-v1");
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("pairs_checked") == 3);
  const auto& verdicts = j.at("verdicts");
  REQUIRE(verdicts.size() == 3);
  CHECK(verdicts[0].at("i") == 1);
  CHECK(verdicts[0].at("j") == 1);
  CHECK(verdicts[0].at("n") == 1);
  CHECK(verdicts[0].at("sigma") == 1);
  REQUIRE(verdicts[1].at("checks").size() == 7);
  CHECK(verdicts[1].at("checks")[0].at("name") == "f_proper_root_color");
  CHECK(verdicts[1].at("checks")[0].at("pass") == true);
}

TEST_CASE("verdict text rendering") {
  const auto text = verdicts_to_text(verify_all(4));
  CHECK(text.find("pair (1,1): pass (n=1, sigma=1)") != std::string::npos);
  CHECK(text.find("pair (3,1): pass (n=21, sigma=29)") != std::string::npos);
  CHECK(text.find("checked 6 pairs, 0 skipped: all pass") != std::string::npos);
  const auto skipped = verdicts_to_text(verify_all(6, 1, 500));
  CHECK(skipped.find("skipped (needs") != std::string::npos);
}

TEST_CASE("random cross-validation summary") {
  const auto report = verify_bounds_random(60, 10, 424242);
  CHECK(report.ok);
  CHECK(report.trials == 60);
  CHECK(report.bound_checked == 54);  // six trials have n = 1
  CHECK(report.bound_violations == 0);
  CHECK(report.brute_checked == 60);
  CHECK(report.brute_mismatches == 0);
  CHECK(report.max_ratio.num <= report.max_ratio.den);
  CHECK(report.failures.empty());

  const auto json = random_bounds_to_json(report);
  CHECK(json.at("format") == "sumtree-random-v1");
  CHECK(json.at("ok") == true);
  CHECK(json.at("seed") == 424242);

  const auto text = random_bounds_to_text(report);
  CHECK(text.find("violations: 0") != std::string::npos);
  CHECK(text.find("mismatches: 0") != std::string::npos);

  CHECK_THROWS_AS(verify_bounds_random(0, 5, 1), input_error);
  CHECK_THROWS_AS(verify_bounds_random(5, 0, 1), input_error);
}

TEST_CASE("single-vertex trees are outside the degree bound") {
  const auto report = verify_bounds_random(1, 1, 7);
  CHECK(report.ok);
  CHECK(report.trials == 1);
  CHECK(report.bound_checked == 0);  // the bound concerns trees with at least one edge
  CHECK(report.brute_checked == 1);
}

TEST_CASE("ratio sequence rows") {
  const auto report = sequence_report({1, 4}, 5);
  CHECK(report.all_ok);
  REQUIRE(report.rows.size() == 4);
  const long long expect_t[] = {6, 8, 10, 12};
  const long long expect_n[] = {9, 45, 381, 3549};
  for (std::size_t idx = 0; idx < 4; ++idx) {
    const auto& row = report.rows[idx];
    CHECK(row.i == static_cast<int>(idx) + 2);
    CHECK_FALSE(row.skipped);
    CHECK(row.t == expect_t[idx]);
    CHECK(row.n == expect_n[idx]);
    CHECK(row.strength == row.i);
    CHECK(row.max_degree == 2 * row.i - 2 + row.t);
    CHECK(row.ratio == Rational{1, 4});
    CHECK(row.ok);
  }

  const auto tenth = sequence_report({1, 10}, 3);
  CHECK(tenth.all_ok);
  REQUIRE(tenth.rows.size() == 2);
  CHECK(tenth.rows[0].ratio == Rational{1, 10});
  CHECK(tenth.rows[1].t == 26);
  CHECK(tenth.rows[1].max_degree == 30);
  CHECK(tenth.rows[1].ratio == Rational{1, 10});
}

TEST_CASE("ratio sequence CSV is frozen") {
  CHECK(sequence_to_csv(sequence_report({1, 4}, 5)) ==
        "i,t,n,strength,max_degree,ratio\n"
        "2,6,9,2,8,0.250000\n"
        "3,8,45,3,12,0.250000\n"
        "4,10,381,4,16,0.250000\n"
        "5,12,3549,5,20,0.250000\n");
}

TEST_CASE("ratio sequence skips over-budget rows") {
  const auto report = sequence_report({1, 4}, 6, 400);
  REQUIRE(report.rows.size() == 5);
  CHECK_FALSE(report.rows[0].skipped);
  CHECK_FALSE(report.rows[1].skipped);
  CHECK_FALSE(report.rows[2].skipped);
  CHECK(report.rows[3].skipped);  // i=5 needs 3549 vertices
  CHECK(report.rows[4].skipped);  // i=6 needs 34089 vertices
  CHECK(report.rows[4].n == 34089);
  CHECK(report.all_ok);  // skipped rows do not fail the report

  const auto csv = sequence_to_csv(report);
  CHECK(csv.find("\n5,") == std::string::npos);  // no row for i=5

  const auto json = sequence_to_json(report);
  CHECK(json.at("rows")[3].at("skipped") == true);
  CHECK(json.at("rows")[3].at("n") == 3549);
  CHECK_FALSE(json.at("rows")[3].contains("ratio"));
  CHECK(json.at("rows")[0].at("ratio") == "1/4");
  CHECK(json.at("rows")[0].at("ratio_decimal") == "0.250000");
}

TEST_CASE("ratio sequence argument validation") {
  CHECK_THROWS_AS(sequence_report({1, 4}, 1), input_error);
  CHECK_THROWS_AS(sequence_report({1, 2}, 5), input_error);
  CHECK_THROWS_AS(sequence_report({3, 4}, 5), input_error);
}

TEST_CASE("rational rendering helpers") {
  CHECK(rational_string({1, 4}) == "1/4");
  CHECK(rational_string({0, 1}) == "0/1");
  CHECK(ratio_decimal({1, 4}) == "0.250000");
  CHECK(ratio_decimal({1, 3}) == "0.333333");
  CHECK(ratio_decimal({1, 1}) == "1.000000");
}
