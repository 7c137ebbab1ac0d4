#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordca/analysis.hpp"
#include "wordca/generators.hpp"
#include "wordca/rules.hpp"
#include "wordca/word.hpp"

namespace wordca {

/// One comparison inside a verdict. expected/observed are free-form JSON so
/// that counts, sets, and inventories all fit the same row shape.
struct VerdictRow {
  std::int64_t n = 0;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json observed;
  bool converged = false;
};

/// Outcome of one law checked against brute-force counts on real prefixes.
/// pass covers every converged row; inconclusive means the data never
/// converged far enough to decide anything.
struct Verdict {
  std::string theorem_id;
  nlohmann::ordered_json config;
  std::vector<VerdictRow> rows;
  bool pass = false;
  bool inconclusive = false;
  std::string notes;

  nlohmann::ordered_json to_json() const;
};

/// Estimate of the depth threshold n0 = k0 * (l + 1) that splits the
/// complexity laws of a run-length image, where k0 is the largest power of
/// a^l b inside the source. Cross-checked against the longest complete b-run
/// of the image; the two scans must agree on healthy data.
struct N0Estimate {
  std::size_t n0 = 0;
  std::size_t k0 = 0;
  std::size_t l = 0;
  std::size_t max_b_run = 0;
  bool method_agreement = false;
};

N0Estimate estimate_n0(const Word& source, std::size_t l);

/// A run-length cellular automaton acting on one a-Sturmian source.
struct ScaConfig {
  std::size_t l = 1;
  /// Head length; defaults to l when left at npos.
  std::size_t l0 = static_cast<std::size_t>(-1);
  std::string epsilon_id = "fibonacci01";
  std::size_t prefix_length = 100000;
  std::size_t n_min = 1;
  /// 0 means "3 * n0", resolved once n0 is known.
  std::size_t n_max = 0;
};

/// Builds the epsilon bit source named by strings such as "fibonacci01",
/// "fibonacci10", "cf01:1,2", "cfcyc10:1,2", "periodic:01".
std::shared_ptr<const PrefixSource> make_epsilon(const std::string& name);

/// Everything the per-config checks share: the source prefix, its image under
/// the run-length rule, and a converged threshold estimate. Construction
/// fails loudly if the two n0 scans disagree or the estimate has not
/// stabilized by the half prefix.
struct ScaInstance {
  ScaConfig config;
  LocalRule rule;
  Word source;
  Word image;
  N0Estimate n0;
  std::size_t n_min = 1;
  std::size_t n_max = 0;

  nlohmann::ordered_json config_json() const;
};

ScaInstance build_instance(const ScaConfig& config);

// Per-law checks. Ids in parentheses are the ones cmd_verify accepts.

/// (cc) Factor complexity of the image follows the three-piece law
/// n+1 / 2n-n0+l+1 / n+l+1 around the threshold n0.
Verdict check_complexity_law(const ScaConfig& config);

/// (cp) Palindromic complexity of the image follows the parity-split law,
/// and the low-depth palindrome inventories match the predicted sets.
Verdict check_palindrome_law(const ScaConfig& config);

/// (ca) Abelian complexity of the image is 2 / 3 / within {2, 3}, with the
/// predicted Parikh-vector sets at low depth.
Verdict check_abelian_law(const ScaConfig& config);

/// (balance2) The image is exactly 2-balanced, with both witness factors
/// present, while the source stays 1-balanced.
Verdict check_two_balance(const ScaConfig& config);

/// (transfer) Complexity transfers through a sliding rule: p_image(n) is at
/// most p_source(n + r - 1), with equality wherever the rule is injective on
/// the source language. Random rules exercise the inequality on fibonacci.
Verdict check_transfer_random(std::size_t rule_count, std::uint32_t seed,
                              std::size_t prefix_length, std::size_t n_max);
Verdict check_transfer_equality(const ScaConfig& config);

/// (mod) Source and image agree on modulo recurrence depth by depth, and
/// window complexity collapses onto factor complexity on the recurrent side.
Verdict check_mod_preservation(std::shared_ptr<const PrefixSource> source,
                               const LocalRule& rule, std::size_t n_max,
                               std::size_t prefix_length);

/// (periodicity) Images of periodic words are periodic with period dividing
/// the seed length; invariant rules preserve the period exactly.
Verdict check_periodicity(const Word& seed, const LocalRule& rule,
                          std::size_t prefix_length);

/// (stability) Reflection-stable rules yield reflection-closed image
/// languages, transfer palindromic complexity wherever injective, and keep
/// images of Sturmian sources rich.
Verdict check_stability_richness(const ScaConfig& config,
                                 std::size_t richness_prefix = 2000);

/// (special) For first-letter-determined rules, every special factor of the
/// image has a special antecedent in the source; rules missing the
/// hypothesis are skipped with a note.
Verdict check_special_provenance(std::shared_ptr<const PrefixSource> source,
                                 const LocalRule& rule, std::size_t n_max,
                                 std::size_t prefix_length);

/// (fixedpoint) The invariant rule reproduces its input up to truncation,
/// the exchange rule composes it with the letter transposition, and both
/// commute with the transposition; images of Sturmian sources stay Sturmian.
Verdict check_fixed_point(std::shared_ptr<const PrefixSource> source,
                          std::uint32_t radius, std::size_t prefix_length,
                          bool expect_sturmian_image);

/// (sturmian) The four Sturmian fingerprints at once: p(n) = n+1,
/// 1-balanced, abelian complexity 2, palindromic complexity 1/2 by parity.
Verdict check_sturmian_characterizations(
    std::shared_ptr<const PrefixSource> source, std::size_t prefix_length,
    std::size_t n_max);

/// (returnwords) In the image, the return words of a are {a b^(n0-l-1),
/// a b^n0} and the return words of b are {b, ba}.
Verdict check_return_words(const ScaConfig& config);

/// (n0) Surfaces the threshold estimate and the agreement of its two scans.
Verdict check_n0(const ScaConfig& config);

/// (increment) The exact finite identity p(n+1) - p(n) equals the sum over
/// length-n factors of (right extensions - 1).
Verdict check_increment_identity(const Word& host, const std::string& label,
                                 std::size_t n_max);

/// The six standard run-length configs: l in {1, 2, 3} crossed with two
/// epsilon slopes.
std::vector<ScaConfig> standard_configs(std::size_t prefix_length = 100000);

/// Runs the named check (or "all") with default fixtures; exits with the
/// theorem ids this harness understands via valid_theorem_ids().
std::vector<Verdict> run_theorem(const std::string& id,
                                 const ScaConfig& config);
const std::vector<std::string>& valid_theorem_ids();

}  // namespace wordca
