#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wordca/word.hpp"

namespace wordca {

/// An infinite word exposed through its finite prefixes.
///
/// prefix(n) always returns the same first n letters regardless of how much
/// was requested before (prefix coherence). Sources may cache; concurrent
/// calls are serialized internally.
class PrefixSource {
 public:
  virtual ~PrefixSource() = default;
  PrefixSource(const PrefixSource&) = delete;
  PrefixSource& operator=(const PrefixSource&) = delete;

  Word prefix(std::size_t n) const;
  const std::string& id() const { return id_; }
  const Alphabet& alphabet() const { return alphabet_; }

 protected:
  PrefixSource(std::string id, Alphabet alphabet)
      : id_(std::move(id)), alphabet_(std::move(alphabet)) {}

  /// Grows buf to at least need letters (may rebuild from scratch). Called
  /// under the internal lock. Throws if the source cannot reach need.
  virtual void extend(std::vector<Letter>& buf, std::size_t need) const = 0;

 private:
  std::string id_;
  Alphabet alphabet_;
  mutable std::mutex mutex_;
  mutable std::vector<Letter> cache_;
};

/// Directive coefficients for the standard-sequence construction of a
/// characteristic Sturmian word. All coefficients are >= 1. With cyclic set,
/// the list repeats forever; otherwise requests beyond what the finite list
/// certifies raise DirectiveExhaustedError.
struct DirectiveSequence {
  std::vector<std::uint32_t> coefficients;
  bool cyclic = false;
};

/// Parameters of the block form  a^l0 b a^(l+e1) b a^(l+e2) b ...  where the
/// bit sequence (ei) comes from epsilon, a source over {0, 1}.
/// Constraints: l >= 1 and 0 <= l0 <= l + 1.
struct ASturmianParams {
  std::size_t l0 = 1;
  std::size_t l = 1;
  std::shared_ptr<const PrefixSource> epsilon;
};

/// Fixed point of a -> ab, b -> a, starting from a.
std::shared_ptr<const PrefixSource> fibonacci_source();

/// Characteristic Sturmian word via standard sequences:
/// s(-1) = b, s(0) = a, s(k) = s(k-1)^d_k s(k-2).
std::shared_ptr<const PrefixSource> characteristic_sturmian_source(
    DirectiveSequence directive);

std::shared_ptr<const PrefixSource> a_sturmian_source(ASturmianParams params);

/// Binary Champernowne word over {0, 1}: the base-2 expansions of
/// 0, 1, 2, ... concatenated.
std::shared_ptr<const PrefixSource> champernowne_source();

/// seed repeated forever; seed must be non-empty.
std::shared_ptr<const PrefixSource> periodic_source(Word seed);

/// Views a binary source as a bit stream over {0, 1} suitable as an epsilon
/// input. By default the source's first alphabet letter maps to 1 and its
/// second to 0; invert swaps that.
std::shared_ptr<const PrefixSource> as_bits(
    std::shared_ptr<const PrefixSource> base, bool invert = false);

// Convenience one-shot wrappers around the sources above.
Word fibonacci(std::size_t n);
Word characteristic_sturmian(const DirectiveSequence& directive,
                             std::size_t n);
Word a_sturmian(const ASturmianParams& params, std::size_t n);
Word champernowne(std::size_t n);
Word periodic(const Word& seed, std::size_t n);

}  // namespace wordca
