#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "wordca/analysis.hpp"
#include "wordca/errors.hpp"
#include "wordca/generators.hpp"
#include "wordca/rules.hpp"
#include "wordca/theorems.hpp"
#include "wordca/word.hpp"

using namespace wordca;

namespace {

Word ab(const std::string& text) {
  return Word::from_text(Alphabet::binary(), text);
}

ScaConfig quick_config(std::size_t l, const std::string& eps,
                       std::size_t prefix_length = 20000) {
  ScaConfig cfg;
  cfg.l = l;
  cfg.epsilon_id = eps;
  cfg.prefix_length = prefix_length;
  return cfg;
}

void expect_green(const Verdict& v) {
  CAPTURE(v.theorem_id);
  CAPTURE(v.config.dump());
  CAPTURE(v.notes);
  CHECK(v.pass);
  CHECK_FALSE(v.inconclusive);
  CHECK_FALSE(v.rows.empty());
}

}  // namespace

TEST_CASE("threshold estimate: k0 scan and b-run scan agree per config") {
  struct Expect {
    std::size_t l;
    const char* eps;
    std::size_t k0;
    std::size_t n0;
  };
  const Expect table[] = {
      {1, "fibonacci01", 2, 4},  {1, "cfcyc10:1,2", 3, 6},
      {2, "fibonacci01", 2, 6},  {2, "cfcyc10:1,2", 3, 9},
      {3, "fibonacci01", 2, 8},  {3, "cfcyc10:1,2", 3, 12},
  };
  for (const auto& e : table) {
    CAPTURE(e.l);
    CAPTURE(e.eps);
    ASturmianParams params;
    params.l0 = e.l;
    params.l = e.l;
    params.epsilon = make_epsilon(e.eps);
    const N0Estimate est = estimate_n0(a_sturmian(params, 30000), e.l);
    CHECK(est.k0 == e.k0);
    CHECK(est.n0 == e.n0);
    CHECK(est.max_b_run == e.n0);
    CHECK(est.method_agreement);
  }
}

TEST_CASE("threshold estimate rejects degenerate inputs") {
  CHECK_THROWS_AS(estimate_n0(fibonacci(1000), 0), InputError);
  CHECK_THROWS_AS(estimate_n0(ab("bbbbbb"), 1), InsufficientDataError);
  // Image too short to close three b-runs.
  CHECK_THROWS_AS(estimate_n0(ab("aabaa"), 1), InsufficientDataError);
}

TEST_CASE("epsilon streams by name") {
  CHECK(make_epsilon("fibonacci01")->prefix(8).to_text() == "10110101");
  CHECK(make_epsilon("fibonacci10")->prefix(8).to_text() == "01001010");
  CHECK(make_epsilon("cfcyc10:1,2")->prefix(7).to_text() == "0101001");
  CHECK(make_epsilon("cfcyc01:1,2")->prefix(7).to_text() == "1010110");
  CHECK(make_epsilon("periodic:0110")->prefix(8).to_text() == "01100110");
  CHECK(make_epsilon("cf01:3,2")->prefix(4).to_text() == "1110");

  CHECK_THROWS_AS(make_epsilon("nope"), InputError);
  CHECK_THROWS_AS(make_epsilon("cfcyc10:"), InputError);
  CHECK_THROWS_AS(make_epsilon("cfcyc10:0,2"), InputError);
  CHECK_THROWS_AS(make_epsilon("cfcyc10:1,x"), InputError);
  CHECK_THROWS_AS(make_epsilon("periodic:01a"), InputError);
}

TEST_CASE("instance building resolves defaults and validates") {
  const ScaInstance inst = build_instance(quick_config(1, "fibonacci01"));
  CHECK(inst.rule.radius() == 2);
  CHECK(inst.source.size() == 20000);
  CHECK(inst.image.size() == 19999);
  CHECK(inst.n0.n0 == 4);
  CHECK(inst.n_min == 1);
  CHECK(inst.n_max == 12);  // defaults to 3 * n0
  CHECK(inst.config_json()["rule"] == "run_length(1)");

  ScaConfig bad = quick_config(0, "fibonacci01");
  CHECK_THROWS_AS(build_instance(bad), InputError);
  bad = quick_config(1, "fibonacci01", 100);
  CHECK_THROWS_AS(build_instance(bad), InputError);
}

TEST_CASE("image complexity follows the three-piece law") {
  for (const auto& cfg : {quick_config(1, "fibonacci01"),
                          quick_config(1, "cfcyc10:1,2"),
                          quick_config(2, "cfcyc10:1,2")}) {
    expect_green(check_complexity_law(cfg));
  }
}

TEST_CASE("palindrome counts and low-depth inventories are exact") {
  expect_green(check_palindrome_law(quick_config(1, "fibonacci01")));
  expect_green(check_palindrome_law(quick_config(2, "cfcyc10:1,2")));

  // Spot-check the inventory shape directly: at depth 4 the image of the
  // fibonacci-driven instance has exactly the palindromes bbbb and abba.
  const ScaInstance inst = build_instance(quick_config(1, "fibonacci01"));
  Analyzer an(inst.image);
  std::set<std::string> got;
  for (const auto& w : an.palindromes(4)) got.insert(w.to_text());
  CHECK(got == std::set<std::string>{"abba", "bbbb"});
  std::set<std::string> odd;
  for (const auto& w : an.palindromes(3)) odd.insert(w.to_text());
  CHECK(odd == std::set<std::string>{"bab", "bbb"});
}

TEST_CASE("abelian classes stay within the proven sets") {
  const ScaConfig cfg = quick_config(1, "fibonacci01");
  expect_green(check_abelian_law(cfg));
  expect_green(check_abelian_law(quick_config(3, "cfcyc10:1,2")));

  const ScaInstance inst = build_instance(cfg);
  Analyzer an(inst.image);
  const auto classes = an.parikh_set(3);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].counts == std::vector<std::uint64_t>{0, 3});
  CHECK(classes[1].counts == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("images are exactly 2-balanced over 1-balanced sources") {
  expect_green(check_two_balance(quick_config(1, "fibonacci01")));

  // This epsilon stream lacks the longer optional witness; the verdict must
  // still be green and the absence reported in the notes.
  const Verdict v = check_two_balance(quick_config(1, "cfcyc10:1,2"));
  expect_green(v);
  CHECK(v.notes.find("absent") != std::string::npos);
}

TEST_CASE("complexity transfers through sliding rules") {
  expect_green(check_transfer_random(5, 12345, 20000, 30));
  expect_green(check_transfer_equality(quick_config(1, "fibonacci01")));
  expect_green(check_transfer_equality(quick_config(2, "cfcyc10:1,2")));
}

TEST_CASE("modulo recurrence carries across the automaton") {
  expect_green(check_mod_preservation(fibonacci_source(),
                                      LocalRule::run_length(1), 6, 20000));
  expect_green(check_mod_preservation(
      periodic_source(ab("ab")),
      LocalRule::invariant(Alphabet::binary(), 1), 6, 10000));
}

TEST_CASE("periodic seeds give periodic images with dividing period") {
  expect_green(check_periodicity(ab("ab"), LocalRule::run_length(1), 10000));
  const Verdict inv = check_periodicity(
      ab("abaab"), LocalRule::invariant(Alphabet::binary(), 2), 10000);
  expect_green(inv);
  expect_green(check_periodicity(ab("ab"),
                                 LocalRule::exchange(Alphabet::binary(), 2),
                                 10000));
  CHECK_THROWS_AS(check_periodicity(ab("ab"), LocalRule::run_length(1), 5),
                  InsufficientDataError);
}

TEST_CASE("reflection stability, palindrome transfer, richness") {
  expect_green(check_stability_richness(quick_config(1, "fibonacci01")));
  expect_green(check_stability_richness(quick_config(2, "cfcyc10:1,2")));
}

TEST_CASE("special factors of images trace back to the source") {
  expect_green(check_special_provenance(
      fibonacci_source(), LocalRule::invariant(Alphabet::binary(), 2), 20,
      20000));
  expect_green(check_special_provenance(
      fibonacci_source(), LocalRule::exchange(Alphabet::binary(), 2), 20,
      20000));
  // The run-length rule is not first-letter determined; the check records a
  // skip instead of failing.
  const Verdict skipped = check_special_provenance(
      fibonacci_source(), LocalRule::run_length(1), 20, 20000);
  CHECK(skipped.pass);
  CHECK(skipped.notes.find("skip") != std::string::npos);
}

TEST_CASE("invariant and exchange rules behave as projections") {
  expect_green(check_fixed_point(fibonacci_source(), 2, 5000, true));
  expect_green(check_fixed_point(fibonacci_source(), 1, 5000, true));
}

TEST_CASE("sturmian fingerprints hold together") {
  expect_green(
      check_sturmian_characterizations(fibonacci_source(), 20000, 100));
  expect_green(check_sturmian_characterizations(
      characteristic_sturmian_source({{2, 1, 1}, true}), 20000, 100));
}

TEST_CASE("return words of the image letters") {
  for (const auto& cfg : {quick_config(1, "fibonacci01"),
                          quick_config(1, "cfcyc10:1,2"),
                          quick_config(3, "fibonacci01")}) {
    expect_green(check_return_words(cfg));
  }
  // Direct anchor for the fibonacci-driven instance with l = 1, n0 = 4:
  const ScaInstance inst = build_instance(quick_config(1, "fibonacci01"));
  Analyzer an(inst.image);
  std::set<std::string> of_a, of_b;
  for (const auto& w : an.return_words(ab("a"))) of_a.insert(w.to_text());
  for (const auto& w : an.return_words(ab("b"))) of_b.insert(w.to_text());
  CHECK(of_a == std::set<std::string>{"abb", "abbbb"});
  CHECK(of_b == std::set<std::string>{"b", "ba"});
}

TEST_CASE("threshold verdict surfaces the estimate fields") {
  const Verdict v = check_n0(quick_config(1, "fibonacci01"));
  expect_green(v);
  bool saw = false;
  for (const auto& row : v.rows) {
    if (row.observed.contains("n0")) {
      CHECK(row.observed["n0"] == 4);
      CHECK(row.observed["k0"] == 2);
      saw = true;
    }
  }
  CHECK(saw);
}

TEST_CASE("complexity increment identity is exact on finite prefixes") {
  expect_green(check_increment_identity(fibonacci(5000), "fibonacci", 40));
  expect_green(check_increment_identity(champernowne(5000), "champernowne",
                                        40));
  expect_green(
      check_increment_identity(periodic(ab("abaab"), 3000), "periodic", 40));
}

TEST_CASE("standard configs cover three radii and two epsilon streams") {
  const auto configs = standard_configs(50000);
  REQUIRE(configs.size() == 6);
  std::multiset<std::size_t> ls;
  std::set<std::string> epsilons;
  for (const auto& cfg : configs) {
    ls.insert(cfg.l);
    epsilons.insert(cfg.epsilon_id);
    CHECK(cfg.prefix_length == 50000);
  }
  CHECK(ls == std::multiset<std::size_t>{1, 1, 2, 2, 3, 3});
  CHECK(epsilons ==
        std::set<std::string>{"fibonacci01", "cfcyc10:1,2"});
}

TEST_CASE("run_theorem dispatches ids and rejects unknown ones") {
  const auto verdicts = run_theorem("cc", quick_config(1, "fibonacci01"));
  REQUIRE(verdicts.size() == 1);
  CHECK(verdicts[0].theorem_id == "cc");
  CHECK(verdicts[0].pass);

  CHECK_THROWS_AS(run_theorem("bogus", quick_config(1, "fibonacci01")),
                  InputError);
  const auto& ids = valid_theorem_ids();
  CHECK(ids.size() == 14);
  for (const std::string required :
       {"cc", "cp", "ca", "balance2", "transfer", "mod", "periodicity",
        "stability", "special", "fixedpoint", "sturmian", "returnwords", "n0",
        "increment"}) {
    CAPTURE(required);
    CHECK(std::find(ids.begin(), ids.end(), required) != ids.end());
  }
}

TEST_CASE("verdict JSON has the expected shape and is deterministic") {
  const ScaConfig cfg = quick_config(1, "fibonacci01");
  const Verdict v = check_complexity_law(cfg);
  const auto js = v.to_json();
  CHECK(js.contains("theorem_id"));
  CHECK(js.contains("config"));
  CHECK(js.contains("rows"));
  CHECK(js.contains("pass"));
  CHECK(js.contains("inconclusive"));
  CHECK(js.contains("notes"));
  REQUIRE(js["rows"].is_array());
  CHECK(js["rows"].size() == v.rows.size());
  CHECK(js["rows"][0].contains("n"));
  CHECK(js["rows"][0].contains("expected"));
  CHECK(js["rows"][0].contains("observed"));
  CHECK(js["rows"][0].contains("converged"));

  const Verdict again = check_complexity_law(cfg);
  CHECK(v.to_json().dump() == again.to_json().dump());
}
