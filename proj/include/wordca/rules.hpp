#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wordca/generators.hpp"
#include "wordca/word.hpp"

namespace wordca {

/// A sliding-window local rule f : A^r -> B stored as a dense table.
///
/// Window w indexes the table in base q = |A| with w[0] as the most
/// significant digit, so table order is lexicographic in the input alphabet.
class LocalRule {
 public:
  LocalRule(Alphabet input, Alphabet output, std::uint32_t radius,
            std::vector<Letter> table);

  /// Radius l+1 over {a, b}: a^(l+1) -> a, every other window -> b.
  /// Collapses each maximal run of a into a run of as many a as the run
  /// exceeds l (none if shorter), hence "run-length" rule.
  static LocalRule run_length(std::size_t l);

  /// Window -> its first letter. The induced map on words is the identity up
  /// to truncation.
  static LocalRule invariant(const Alphabet& alphabet, std::uint32_t radius);

  /// Window -> the transpose of its first letter (binary alphabets only).
  static LocalRule exchange(const Alphabet& alphabet, std::uint32_t radius);

  /// Parses a table in the line format "<window> <output-letter>", with '#'
  /// comments and blank lines allowed. Every window over the input alphabet
  /// must appear exactly once; violations raise RuleFormatError.
  static LocalRule parse_table(std::istream& in, const Alphabet& input,
                               const Alphabet& output);

  std::uint32_t radius() const { return radius_; }
  const Alphabet& input_alphabet() const { return input_; }
  const Alphabet& output_alphabet() const { return output_; }
  std::size_t table_size() const { return table_.size(); }

  Letter output(std::span<const Letter> window) const;
  Letter output_at(std::size_t index) const { return table_[index]; }
  /// Decodes a table index back into its window.
  Word window_at(std::size_t index) const;

 private:
  Alphabet input_;
  Alphabet output_;
  std::uint32_t radius_;
  std::vector<Letter> table_;
};

/// Structural facts about a rule, each decided by scanning the whole table.
struct RuleProfile {
  bool invariant = false;        ///< every window maps to its first letter
  bool stable = false;           ///< f(reverse(w)) == f(w) for every window
  bool first_letter_determined = false;  ///< outputs agree iff first letters do
  bool surjective = false;       ///< every output letter is attained
};

/// Slides rule across w. Words shorter than the radius map to the empty word;
/// otherwise the image has length |w| - r + 1 and image[i] = f(w[i..i+r)).
Word apply(const LocalRule& rule, const Word& w);

RuleProfile profile(const LocalRule& rule);

/// Images of all (n + r - 1)-length factors of host, sorted and deduplicated.
/// This equals the length-n factor set of the image word.
std::vector<Word> language_image(const LocalRule& rule, const Word& host,
                                 std::size_t n);

/// True iff apply is injective on the (n + r - 1)-length factors of host.
bool injective_on_language(const LocalRule& rule, const Word& host,
                           std::size_t n);

/// Letter transposition of a binary word (first letter <-> second letter).
Word exchange_map(const Word& w);

/// True iff applying the rule commutes with the letter transposition on this
/// host: apply(rule, exchange(host)) == exchange(apply(rule, host)).
bool exchange_commutes(const LocalRule& rule, const Word& host);

/// The image of a source under a rule, again as a prefix source.
std::shared_ptr<const PrefixSource> image_source(
    std::shared_ptr<const PrefixSource> base, LocalRule rule);

}  // namespace wordca
