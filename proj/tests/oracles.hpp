#pragma once

// Naive reference implementations used to cross-check the library's exact
// counters. Everything works on plain std::string by direct enumeration with
// std::set / std::map; the value of these oracles is their independence from
// the library's index structures (suffix arrays, palindromic tree), not
// their speed. Intended for hosts up to a few thousand letters.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::set<std::string> factors(const std::string& s, std::size_t n) {
  std::set<std::string> out;
  if (n == 0) {
    out.insert("");
    return out;
  }
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.insert(s.substr(i, n));
  return out;
}

inline std::uint64_t p(const std::string& s, std::size_t n) {
  return factors(s, n).size();
}

// Distinct aligned blocks s[kn .. kn+n).
inline std::set<std::string> window_factors(const std::string& s,
                                            std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= s.size(); i += n) out.insert(s.substr(i, n));
  return out;
}

inline std::uint64_t pf(const std::string& s, std::size_t n) {
  return window_factors(s, n).size();
}

inline bool is_palindrome(const std::string& w) {
  return std::equal(w.begin(), w.end(), w.rbegin());
}

inline std::set<std::string> palindromes(const std::string& s, std::size_t n) {
  std::set<std::string> out;
  for (const auto& f : factors(s, n)) {
    if (is_palindrome(f)) out.insert(f);
  }
  return out;
}

inline std::uint64_t pal(const std::string& s, std::size_t n) {
  return palindromes(s, n).size();
}

inline std::map<char, std::uint64_t> parikh(const std::string& w) {
  std::map<char, std::uint64_t> out;
  for (char c : w) ++out[c];
  return out;
}

inline std::set<std::map<char, std::uint64_t>> parikh_classes(
    const std::string& s, std::size_t n) {
  std::set<std::map<char, std::uint64_t>> out;
  for (const auto& f : factors(s, n)) out.insert(parikh(f));
  return out;
}

inline std::uint64_t rho_ab(const std::string& s, std::size_t n) {
  return parikh_classes(s, n).size();
}

// Distinct letters that extend the factor on the right inside s.
inline std::set<char> right_extensions(const std::string& s,
                                       const std::string& factor) {
  std::set<char> out;
  for (std::size_t i = 0; i + factor.size() < s.size(); ++i) {
    if (s.compare(i, factor.size(), factor) == 0) {
      out.insert(s[i + factor.size()]);
    }
  }
  return out;
}

inline std::set<char> left_extensions(const std::string& s,
                                      const std::string& factor) {
  std::set<char> out;
  for (std::size_t i = 1; i + factor.size() <= s.size(); ++i) {
    if (s.compare(i, factor.size(), factor) == 0) {
      out.insert(s[i - 1]);
    }
  }
  return out;
}

inline std::set<std::string> right_special(const std::string& s,
                                           std::size_t n) {
  std::set<std::string> out;
  for (const auto& f : factors(s, n)) {
    if (right_extensions(s, f).size() > 1) out.insert(f);
  }
  return out;
}

inline std::set<std::string> left_special(const std::string& s,
                                          std::size_t n) {
  std::set<std::string> out;
  for (const auto& f : factors(s, n)) {
    if (left_extensions(s, f).size() > 1) out.insert(f);
  }
  return out;
}

// Sum over length-n factors of (right-extension count - 1); factors with no
// extension (the final suffix) contribute -1, which is what makes the sum
// exactly p(n+1) - p(n) on a finite word.
inline std::int64_t right_delta_sum(const std::string& s, std::size_t n) {
  std::int64_t sum = 0;
  for (const auto& f : factors(s, n)) {
    sum += static_cast<std::int64_t>(right_extensions(s, f).size()) - 1;
  }
  return sum;
}

// Largest per-letter count spread over equal-length windows, maximized over
// lengths 1..max_n.
inline std::uint64_t balance(const std::string& s, std::size_t max_n) {
  std::set<char> letters(s.begin(), s.end());
  std::uint64_t alpha = 0;
  for (std::size_t n = 1; n <= max_n && n <= s.size(); ++n) {
    for (char x : letters) {
      std::uint64_t lo = n + 1, hi = 0;
      for (std::size_t i = 0; i + n <= s.size(); ++i) {
        std::uint64_t cnt = 0;
        for (std::size_t j = 0; j < n; ++j) cnt += (s[i + j] == x);
        lo = std::min(lo, cnt);
        hi = std::max(hi, cnt);
      }
      alpha = std::max(alpha, hi - lo);
    }
  }
  return alpha;
}

enum class Tri { kTrue, kFalse, kInconclusive };

// Mirrors the analyzer's verdict rule: true when every length-n factor hits
// every residue class mod n; false only when every residue class offers at
// least min_windows complete windows; otherwise inconclusive.
inline Tri mod_recurrent(const std::string& s, std::size_t n,
                         std::size_t min_windows = 50) {
  if (n == 0 || n > s.size()) return Tri::kInconclusive;
  const std::size_t last = s.size() - n;
  bool all = true;
  for (const auto& f : factors(s, n)) {
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
      if (s.compare(i, n, f) == 0) hit[i % n] = true;
    }
    for (bool h : hit) all = all && h;
  }
  if (all) return Tri::kTrue;
  std::size_t windows = last / n + 1;
  for (std::size_t r = 1; r < n; ++r) {
    windows = std::min(windows, r <= last ? (last - r) / n + 1 : 0);
  }
  return windows >= min_windows ? Tri::kFalse : Tri::kInconclusive;
}

// Distinct palindromic substrings (counting the empty word) of each prefix;
// index = prefix length.
inline std::vector<std::uint64_t> prefix_palindromes(const std::string& s) {
  std::vector<std::uint64_t> out;
  out.reserve(s.size() + 1);
  std::set<std::string> seen;
  seen.insert("");
  out.push_back(1);
  for (std::size_t m = 1; m <= s.size(); ++m) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::string cand = s.substr(i, m - i);
      if (is_palindrome(cand)) seen.insert(cand);
    }
    out.push_back(seen.size());
  }
  return out;
}

inline bool rich(const std::string& s) {
  const auto counts = prefix_palindromes(s);
  for (std::size_t m = 0; m < counts.size(); ++m) {
    if (counts[m] != m + 1) return false;
  }
  return true;
}

inline std::vector<std::size_t> occurrence_positions(const std::string& s,
                                                     const std::string& f) {
  std::vector<std::size_t> out;
  if (f.empty()) return out;
  for (std::size_t i = 0; i + f.size() <= s.size(); ++i) {
    if (s.compare(i, f.size(), f) == 0) out.push_back(i);
  }
  return out;
}

inline std::set<std::string> return_words(const std::string& s,
                                          const std::string& f) {
  std::set<std::string> out;
  const auto pos = occurrence_positions(s, f);
  for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
    out.insert(s.substr(pos[k], pos[k + 1] - pos[k]));
  }
  return out;
}

// Slides a window of length r over s and maps each window through rule; the
// callable receives the window text and returns one output character.
template <typename Rule>
std::string apply_rule(const std::string& s, std::size_t r, Rule&& rule) {
  std::string out;
  if (s.size() < r) return out;
  for (std::size_t i = 0; i + r <= s.size(); ++i) {
    out.push_back(rule(s.substr(i, r)));
  }
  return out;
}

inline std::size_t max_run(const std::string& s, char x) {
  std::size_t best = 0, cur = 0;
  for (char c : s) {
    cur = (c == x) ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

inline std::size_t max_power(const std::string& s, const std::string& block) {
  std::size_t k = 0;
  std::string stacked;
  while (true) {
    stacked += block;
    if (s.find(stacked) == std::string::npos) return k;
    ++k;
  }
}

}  // namespace oracle
