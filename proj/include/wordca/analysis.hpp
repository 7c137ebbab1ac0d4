#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordca/word.hpp"

namespace wordca {

/// An exact count plus a convergence flag. The count always describes the
/// analyzed prefix; converged means the half-length prefix already yields the
/// same count, i.e. the value has stabilized and can stand in for the
/// infinite word at this depth.
struct Counted {
  std::uint64_t value = 0;
  bool converged = false;

  friend bool operator==(const Counted&, const Counted&) = default;
};

struct AnalyzerOptions {
  /// Depth guard: complexity tables refuse n beyond |host| / horizon_divisor
  /// unless force is set.
  std::size_t horizon_divisor = 100;
  bool force = false;
  /// Minimum complete windows per residue class before an uncovered residue
  /// counts as a refutation rather than as inconclusive.
  std::size_t recurrence_windows = 50;
};

/// One complexity-table row: factor count p, aligned-window count pf,
/// palindrome count pal, and Parikh-class count rho_ab at depth n.
struct ComplexityRow {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t pf = 0;
  std::uint64_t pal = 0;
  std::uint64_t rho_ab = 0;
  bool converged = false;
};

struct ComplexityTable {
  std::vector<ComplexityRow> rows;

  void write_csv(std::ostream& out) const;
  nlohmann::ordered_json to_json() const;
};

/// Factors whose right (left) extension count exceeds 1, with those counts.
struct SpecialFactorReport {
  std::size_t n = 0;
  std::vector<std::pair<Word, std::uint32_t>> right_special;
  std::vector<std::pair<Word, std::uint32_t>> left_special;
  std::vector<Word> bispecial;
  /// Sum over all length-n factors of (right extension count - 1); equals
  /// p(n+1) - p(n) exactly on the prefix.
  std::int64_t right_delta_sum = 0;
  std::int64_t left_delta_sum = 0;
};

/// The largest per-letter occurrence spread over equal-length factors, with
/// one witnessing pair.
struct BalanceReport {
  std::uint64_t alpha = 0;
  std::size_t witness_n = 0;  ///< length at which alpha is attained
  char letter = 0;
  Word witness_hi;
  Word witness_lo;
  bool converged = false;
};

/// Occurrence coverage of every length-n factor across residue classes mod n.
struct RecurrenceReport {
  enum class Verdict { kTrue, kFalse, kInconclusive };

  std::size_t n = 0;
  Verdict verdict = Verdict::kInconclusive;
  std::vector<Word> factors;  ///< row labels, lexicographic
  /// coverage[i][r]: factor i occurs at some position == r (mod n).
  std::vector<std::vector<bool>> coverage;
  /// Aligned-occurrence factors coincide with the full length-n factor set.
  bool window_set_equals_language = false;
  /// Fewest complete windows available in any residue class.
  std::size_t min_windows_per_residue = 0;
};

/// Distinct-palindrome growth along prefixes, and the complexity identity
/// pal(n) + pal(n+1) == p(n+1) - p(n) + 2 evaluated on converged depths.
struct RichnessReport {
  bool rich = false;
  /// Shortest prefix length whose palindrome count falls short; -1 if none.
  std::ptrdiff_t first_violation = -1;
  /// Distinct palindromic factors (counting the empty word) of each prefix,
  /// index = prefix length.
  std::vector<std::uint64_t> prefix_palindromes;
  bool identity_holds = false;
  std::size_t identity_depths_checked = 0;
};

/// Exact counting facilities over one host word and its half-length prefix.
///
/// Counts are exact (index structures, no sampling or hashing shortcuts in
/// the arithmetic); the half-prefix comparison supplies every converged flag.
class Analyzer {
 public:
  explicit Analyzer(Word host, AnalyzerOptions options = {});
  ~Analyzer();
  Analyzer(Analyzer&&) noexcept;
  Analyzer& operator=(Analyzer&&) noexcept;

  const Word& host() const { return host_; }
  const AnalyzerOptions& options() const { return options_; }
  /// Largest depth the guard admits without force.
  std::size_t horizon() const;

  /// Number of distinct length-n factors; p(0) = 1.
  Counted factor_complexity(std::size_t n) const;
  /// Number of distinct aligned blocks host[kn .. kn+n); requires n >= 1 and
  /// at least two complete windows (else BoundaryError).
  Counted window_complexity(std::size_t n) const;
  /// Number of distinct length-n palindromic factors; pal(0) = 1.
  Counted palindromic_complexity(std::size_t n) const;
  /// Number of distinct Parikh vectors over length-n factors; rho(0) = 1.
  Counted abelian_complexity(std::size_t n) const;

  /// Distinct length-n factors, lexicographic.
  std::vector<Word> factors(std::size_t n) const;
  /// Distinct length-n palindromic factors, lexicographic.
  std::vector<Word> palindromes(std::size_t n) const;
  /// Distinct Parikh vectors of length-n factors, sorted.
  std::vector<ParikhVector> parikh_set(std::size_t n) const;

  SpecialFactorReport special_factors(std::size_t n) const;
  BalanceReport balance_coefficient(std::size_t max_n) const;
  RecurrenceReport modulo_recurrence(std::size_t n) const;
  RichnessReport richness(std::size_t identity_max_n = 0) const;

  /// Return words of factor: slices of host from one occurrence to the next,
  /// sorted and deduplicated. Requires at least two occurrences.
  std::vector<Word> return_words(const Word& factor) const;

  /// Rows n_min..n_max of all four complexities. Guarded: n_max beyond
  /// horizon() raises GuardError unless options().force.
  ComplexityTable complexity_table(std::size_t n_min, std::size_t n_max) const;

 private:
  struct FactorIndex;
  struct PalIndex;

  const FactorIndex& full_factors() const;
  const FactorIndex& half_factors() const;
  const PalIndex& full_pals() const;
  const PalIndex& half_pals() const;
  std::uint64_t count_windows(std::size_t n, std::size_t host_len) const;
  std::uint64_t count_abelian(std::size_t n, std::size_t host_len) const;
  std::size_t half_len() const { return host_.size() / 2; }

  Word host_;
  AnalyzerOptions options_;
  mutable std::unique_ptr<FactorIndex> full_factors_;
  mutable std::unique_ptr<FactorIndex> half_factors_;
  mutable std::unique_ptr<PalIndex> full_pals_;
  mutable std::unique_ptr<PalIndex> half_pals_;
};

// One-shot conveniences; each builds a transient Analyzer.
Counted factor_complexity(const Word& host, std::size_t n);
Counted window_complexity(const Word& host, std::size_t n);
Counted palindromic_complexity(const Word& host, std::size_t n);
Counted abelian_complexity(const Word& host, std::size_t n);
SpecialFactorReport special_factors(const Word& host, std::size_t n);
BalanceReport balance_coefficient(const Word& host, std::size_t max_n);
RecurrenceReport modulo_recurrence(const Word& host, std::size_t n);
RichnessReport richness_check(const Word& host);
std::vector<Word> return_words(const Word& host, const Word& factor);

}  // namespace wordca
