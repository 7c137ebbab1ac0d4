#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordca/errors.hpp"

namespace wordca {

/// Index of a symbol within an Alphabet.
using Letter = std::uint8_t;

/// An ordered list of distinct single-character symbols.
///
/// The order is significant everywhere: a word stores letters as indices into
/// its alphabet, factor sets iterate lexicographically by this order, and
/// Parikh coordinates follow it.
class Alphabet {
 public:
  Alphabet() = default;

  /// Builds an alphabet from its symbols; they must be distinct and non-empty.
  static Alphabet from_symbols(std::string_view symbols);
  static const Alphabet& binary();    ///< {a, b}
  static const Alphabet& digits01();  ///< {0, 1}

  std::size_t size() const { return symbols_.size(); }
  char symbol(Letter i) const { return symbols_[i]; }
  const std::string& symbols() const { return symbols_; }
  std::optional<Letter> index_of(char c) const;
  /// Like index_of but throws InputError for foreign symbols.
  Letter require(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// A finite word: an immutable sequence of letters over a fixed alphabet.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  /// Parses text symbol by symbol; throws InputError naming the first foreign
  /// symbol and its position.
  static Word from_text(const Alphabet& alphabet, std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::string to_text() const;

  /// Copies the length-len factor starting at pos; bounds-checked.
  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t n) const { return subword(0, n); }
  /// Concatenation; both operands must share an alphabet.
  Word append(const Word& other) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  /// Orders first by alphabet symbols, then lexicographically by letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Occurrence counts per letter, in alphabet order; the coordinate sum is the
/// word length.
struct ParikhVector {
  std::vector<std::uint64_t> counts;

  std::uint64_t sum() const;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
  ParikhVector& operator+=(const ParikhVector& other);
};

/// All start positions of a factor inside a host, ascending; overlaps count.
struct OccurrenceSet {
  Word factor;
  std::vector<std::size_t> positions;
};

/// The distinct factors of one length, lexicographically sorted.
///
/// beyond_prefix flags a request longer than the host: the set is then empty
/// because the data ran out, not because the (infinite) word lacks factors.
struct FactorSet {
  std::vector<Word> factors;
  bool beyond_prefix = false;
};

/// Mirror image: the word read right to left.
Word reflect(const Word& w);

/// True iff w equals its own mirror image; the empty word qualifies.
bool is_palindrome(const Word& w);

ParikhVector parikh_vector(const Word& w);

/// Distinct factors of length n of host, sorted; n == 0 yields {empty word}.
FactorSet factor_set(const Word& host, std::size_t n);

/// Start positions of factor in host; factor must be non-empty.
OccurrenceSet occurrences(const Word& host, const Word& factor);

/// Length of the longest run of the symbol x in host; 0 if absent.
std::size_t max_run(const Word& host, char x);

/// Largest k such that block repeated k times is a factor of host.
/// block must be non-empty; k == 0 when block does not occur at all.
std::size_t max_power(const Word& host, const Word& block);

}  // namespace wordca
