#include "wordca/word.hpp"

#include <algorithm>
#include <unordered_map>

namespace wordca {

Alphabet Alphabet::from_symbols(std::string_view symbols) {
  if (symbols.empty()) {
    throw InputError("alphabet must contain at least one symbol");
  }
  Alphabet a;
  for (char c : symbols) {
    if (a.symbols_.find(c) != std::string::npos) {
      throw InputError(std::string("duplicate alphabet symbol '") + c + "'");
    }
    a.symbols_.push_back(c);
  }
  return a;
}

const Alphabet& Alphabet::binary() {
  static const Alphabet a = Alphabet::from_symbols("ab");
  return a;
}

const Alphabet& Alphabet::digits01() {
  static const Alphabet a = Alphabet::from_symbols("01");
  return a;
}

std::optional<Letter> Alphabet::index_of(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

Letter Alphabet::require(char c) const {
  auto idx = index_of(c);
  if (!idx) {
    throw InputError(std::string("symbol '") + c + "' is not in alphabet \"" +
                     symbols_ + "\"");
  }
  return *idx;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l >= alphabet_.size()) {
      throw InputError("letter index " + std::to_string(l) +
                       " out of range for alphabet \"" + alphabet_.symbols() +
                       "\"");
    }
  }
}

Word Word::from_text(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto idx = alphabet.index_of(text[i]);
    if (!idx) {
      throw InputError(std::string("symbol '") + text[i] + "' at position " +
                       std::to_string(i) + " is not in alphabet \"" +
                       alphabet.symbols() + "\"");
    }
    letters.push_back(*idx);
  }
  return Word(alphabet, std::move(letters));
}

std::string Word::to_text() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(alphabet_.symbol(l));
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size() || len > letters_.size() - pos) {
    throw BoundaryError("subword [" + std::to_string(pos) + ", " +
                        std::to_string(pos + len) + ") exceeds word length " +
                        std::to_string(letters_.size()));
  }
  return Word(alphabet_,
              std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word Word::append(const Word& other) const {
  if (!(alphabet_ == other.alphabet_)) {
    throw InputError("cannot concatenate words over different alphabets");
  }
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(letters));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.alphabet_.symbols() <=> b.alphabet_.symbols(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

std::uint64_t ParikhVector::sum() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& other) {
  if (counts.size() < other.counts.size()) {
    counts.resize(other.counts.size(), 0);
  }
  for (std::size_t i = 0; i < other.counts.size(); ++i) {
    counts[i] += other.counts[i];
  }
  return *this;
}

Word reflect(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet(), std::move(letters));
}

bool is_palindrome(const Word& w) {
  auto s = w.letters();
  std::size_t n = s.size();
  for (std::size_t i = 0; 2 * i + 1 < n; ++i) {
    if (s[i] != s[n - 1 - i]) return false;
  }
  return true;
}

ParikhVector parikh_vector(const Word& w) {
  ParikhVector pv;
  pv.counts.assign(w.alphabet().size(), 0);
  for (Letter l : w.letters()) ++pv.counts[l];
  return pv;
}

FactorSet factor_set(const Word& host, std::size_t n) {
  FactorSet out;
  if (n > host.size()) {
    out.beyond_prefix = true;
    return out;
  }
  if (n == 0) {
    out.factors.push_back(Word(host.alphabet()));
    return out;
  }
  auto s = host.letters();
  const char* base = reinterpret_cast<const char*>(s.data());
  std::vector<std::string_view> views;
  views.reserve(host.size() - n + 1);
  for (std::size_t i = 0; i + n <= host.size(); ++i) {
    views.emplace_back(base + i, n);
  }
  std::sort(views.begin(), views.end());
  views.erase(std::unique(views.begin(), views.end()), views.end());
  out.factors.reserve(views.size());
  for (auto v : views) {
    std::size_t pos = static_cast<std::size_t>(v.data() - base);
    out.factors.push_back(host.subword(pos, n));
  }
  return out;
}

OccurrenceSet occurrences(const Word& host, const Word& factor) {
  if (factor.empty()) {
    throw InputError("occurrences requires a non-empty factor");
  }
  if (!(host.alphabet() == factor.alphabet())) {
    throw InputError("occurrences requires host and factor over one alphabet");
  }
  OccurrenceSet out;
  out.factor = factor;
  auto h = host.letters();
  auto f = factor.letters();
  if (f.size() > h.size()) return out;
  for (std::size_t i = 0; i + f.size() <= h.size(); ++i) {
    if (std::equal(f.begin(), f.end(), h.begin() + i)) {
      out.positions.push_back(i);
    }
  }
  return out;
}

std::size_t max_run(const Word& host, char x) {
  auto idx = host.alphabet().index_of(x);
  if (!idx) return 0;
  std::size_t best = 0, cur = 0;
  for (Letter l : host.letters()) {
    cur = (l == *idx) ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

std::size_t max_power(const Word& host, const Word& block) {
  if (block.empty()) {
    throw InputError("max_power requires a non-empty block");
  }
  auto occ = occurrences(host, block);
  if (occ.positions.empty()) return 0;
  // Chain occurrences spaced exactly |block| apart; the longest chain is the
  // highest power present. Descending order makes each chain length a single
  // lookup on the previously computed tail.
  std::size_t m = block.size();
  std::unordered_map<std::size_t, std::size_t> chain;
  chain.reserve(occ.positions.size());
  std::size_t best = 1;
  for (auto it = occ.positions.rbegin(); it != occ.positions.rend(); ++it) {
    std::size_t p = *it;
    auto tail = chain.find(p + m);
    std::size_t k = 1 + (tail == chain.end() ? 0 : tail->second);
    chain.emplace(p, k);
    best = std::max(best, k);
  }
  return best;
}

}  // namespace wordca
