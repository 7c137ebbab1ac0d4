#include "wordca/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace wordca {

namespace {

std::string_view view_of(std::span<const Letter> text, std::size_t pos,
                         std::size_t len) {
  return std::string_view(reinterpret_cast<const char*>(text.data()) + pos,
                          len);
}

}  // namespace

/// Suffix array + LCP over one prefix. Distinct-factor counts per length fall
/// out of an LCP histogram; length-n factor groups (and their one-letter
/// extensions) fall out of a single ordered walk.
struct Analyzer::FactorIndex {
  std::span<const Letter> text;
  std::size_t n = 0;
  std::vector<std::int32_t> sa;
  std::vector<std::int32_t> rank;
  std::vector<std::int32_t> lcp;      // lcp[i] = lcp(sa[i-1], sa[i]), i >= 1
  std::vector<std::uint64_t> lcp_ge;  // lcp_ge[h] = #{i : lcp[i] >= h}

  explicit FactorIndex(std::span<const Letter> t) : text(t), n(t.size()) {
    build();
  }

  void build() {
    sa.resize(n);
    rank.resize(n);
    if (n == 0) {
      lcp_ge.assign(2, 0);
      return;
    }
    std::iota(sa.begin(), sa.end(), 0);
    for (std::size_t i = 0; i < n; ++i) rank[i] = text[i];
    std::vector<std::int32_t> next_rank(n);
    for (std::size_t k = 1;; k *= 2) {
      auto key = [&](std::int32_t i) {
        std::int32_t second =
            (static_cast<std::size_t>(i) + k < n) ? rank[i + k] : -1;
        return std::pair<std::int32_t, std::int32_t>(rank[i], second);
      };
      std::sort(sa.begin(), sa.end(),
                [&](std::int32_t a, std::int32_t b) { return key(a) < key(b); });
      next_rank[sa[0]] = 0;
      for (std::size_t i = 1; i < n; ++i) {
        next_rank[sa[i]] =
            next_rank[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
      }
      rank = next_rank;
      if (rank[sa[n - 1]] == static_cast<std::int32_t>(n - 1)) break;
    }
    lcp.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rank[i] > 0) {
        std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[rank[i]] = static_cast<std::int32_t>(h);
        if (h > 0) --h;
      } else {
        h = 0;
      }
    }
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i) ++hist[lcp[i]];
    lcp_ge.assign(n + 2, 0);
    for (std::size_t v = n; v-- > 0;) {
      lcp_ge[v] = hist[v] + lcp_ge[v + 1];
    }
  }

  std::uint64_t distinct(std::size_t len) const {
    if (len == 0) return 1;
    if (len > n) return 0;
    return (n - len + 1) - lcp_ge[len];
  }

  /// Calls fn(first_position, right_mask, left_mask, occurrence_count) once
  /// per distinct length-len factor, in lexicographic order. Masks collect
  /// the letters seen immediately after / before occurrences.
  template <typename Fn>
  void for_each_group(std::size_t len, Fn&& fn) const {
    std::uint64_t right = 0, left = 0;
    std::size_t count = 0;
    std::size_t rep = 0;
    bool prev_eligible = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t pos = sa[i];
      if (n - pos < len) {
        prev_eligible = false;
        continue;
      }
      bool continues =
          prev_eligible && static_cast<std::size_t>(lcp[i]) >= len;
      if (!continues && count > 0) {
        fn(rep, right, left, count);
        right = left = 0;
        count = 0;
      }
      if (!continues) rep = pos;
      if (pos + len < n) right |= std::uint64_t{1} << text[pos + len];
      if (pos > 0) left |= std::uint64_t{1} << text[pos - 1];
      ++count;
      prev_eligible = true;
    }
    if (count > 0) fn(rep, right, left, count);
  }
};

/// Palindromic tree: every node past the two roots is one distinct
/// palindromic factor, created at its first occurrence.
struct Analyzer::PalIndex {
  struct Node {
    std::int32_t len;
    std::int32_t link;
    std::int64_t end_pos;  // first occurrence, inclusive end index
    std::vector<std::int32_t> next;
  };

  std::span<const Letter> text;
  std::size_t q = 0;
  std::vector<Node> nodes;
  std::vector<std::uint64_t> by_len;
  std::vector<std::uint64_t> prefix_count;  // distinct non-empty palindromes

  PalIndex(std::span<const Letter> t, std::size_t alphabet_size)
      : text(t), q(alphabet_size) {
    build();
  }

  void build() {
    std::size_t n = text.size();
    nodes.clear();
    nodes.reserve(n + 2);
    nodes.push_back({-1, 0, -1, std::vector<std::int32_t>(q, -1)});
    nodes.push_back({0, 0, -1, std::vector<std::int32_t>(q, -1)});
    by_len.assign(n + 1, 0);
    prefix_count.assign(n + 1, 0);
    std::int32_t last = 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Letter c = text[i];
      auto fits = [&](std::int32_t node) {
        std::int64_t start =
            static_cast<std::int64_t>(i) - 1 - nodes[node].len;
        return start >= 0 && text[start] == c;
      };
      std::int32_t cur = last;
      while (!fits(cur)) cur = nodes[cur].link;
      if (nodes[cur].next[c] != -1) {
        last = nodes[cur].next[c];
      } else {
        std::int32_t len = nodes[cur].len + 2;
        std::int32_t link = 1;
        if (len > 1) {
          std::int32_t x = nodes[cur].link;
          while (!fits(x)) x = nodes[x].link;
          link = nodes[x].next[c];
          if (link == -1) link = 1;
        }
        nodes.push_back({len, link, static_cast<std::int64_t>(i),
                         std::vector<std::int32_t>(q, -1)});
        auto id = static_cast<std::int32_t>(nodes.size() - 1);
        nodes[cur].next[c] = id;
        last = id;
        ++by_len[len];
        ++total;
      }
      prefix_count[i + 1] = total;
    }
  }

  std::uint64_t count(std::size_t len) const {
    if (len == 0) return 1;
    if (len >= by_len.size()) return 0;
    return by_len[len];
  }
};

Analyzer::Analyzer(Word host, AnalyzerOptions options)
    : host_(std::move(host)), options_(options) {
  if (host_.alphabet().size() > 64) {
    throw InputError("analyzer supports alphabets of at most 64 symbols");
  }
}

Analyzer::~Analyzer() = default;
Analyzer::Analyzer(Analyzer&&) noexcept = default;
Analyzer& Analyzer::operator=(Analyzer&&) noexcept = default;

const Analyzer::FactorIndex& Analyzer::full_factors() const {
  if (!full_factors_) {
    full_factors_ = std::make_unique<FactorIndex>(host_.letters());
  }
  return *full_factors_;
}

const Analyzer::FactorIndex& Analyzer::half_factors() const {
  if (!half_factors_) {
    half_factors_ =
        std::make_unique<FactorIndex>(host_.letters().subspan(0, half_len()));
  }
  return *half_factors_;
}

const Analyzer::PalIndex& Analyzer::full_pals() const {
  if (!full_pals_) {
    full_pals_ =
        std::make_unique<PalIndex>(host_.letters(), host_.alphabet().size());
  }
  return *full_pals_;
}

const Analyzer::PalIndex& Analyzer::half_pals() const {
  if (!half_pals_) {
    half_pals_ = std::make_unique<PalIndex>(
        host_.letters().subspan(0, half_len()), host_.alphabet().size());
  }
  return *half_pals_;
}

std::size_t Analyzer::horizon() const {
  return host_.size() / options_.horizon_divisor;
}

Counted Analyzer::factor_complexity(std::size_t n) const {
  if (n == 0) return {1, true};
  if (n > host_.size()) return {0, false};
  std::uint64_t value = full_factors().distinct(n);
  bool converged = n <= half_len() && half_factors().distinct(n) == value;
  return {value, converged};
}

std::uint64_t Analyzer::count_windows(std::size_t n,
                                      std::size_t host_len) const {
  auto text = host_.letters();
  std::unordered_set<std::string_view> seen;
  seen.reserve(host_len / n + 1);
  for (std::size_t k = 0; (k + 1) * n <= host_len; ++k) {
    seen.insert(view_of(text, k * n, n));
  }
  return seen.size();
}

Counted Analyzer::window_complexity(std::size_t n) const {
  if (n == 0) {
    throw InputError("window complexity requires n >= 1");
  }
  if (2 * n > host_.size()) {
    throw BoundaryError("window complexity at depth " + std::to_string(n) +
                        " needs at least two complete windows; host length is " +
                        std::to_string(host_.size()));
  }
  std::uint64_t value = count_windows(n, host_.size());
  bool converged =
      2 * n <= half_len() && count_windows(n, half_len()) == value;
  return {value, converged};
}

Counted Analyzer::palindromic_complexity(std::size_t n) const {
  if (n == 0) return {1, true};
  if (n > host_.size()) return {0, false};
  std::uint64_t value = full_pals().count(n);
  bool converged = n <= half_len() && half_pals().count(n) == value;
  return {value, converged};
}

std::uint64_t Analyzer::count_abelian(std::size_t n,
                                      std::size_t host_len) const {
  auto text = host_.letters();
  std::size_t q = host_.alphabet().size();
  if (n > host_len) return 0;
  if (q == 2) {
    // Sliding one step changes the letter-0 count by at most 1, so the
    // attained counts form a contiguous range.
    std::size_t cur = 0;
    for (std::size_t i = 0; i < n; ++i) cur += text[i] == 0;
    std::size_t lo = cur, hi = cur;
    for (std::size_t i = n; i < host_len; ++i) {
      cur += (text[i] == 0) - (text[i - n] == 0);
      lo = std::min(lo, cur);
      hi = std::max(hi, cur);
    }
    return hi - lo + 1;
  }
  std::vector<std::uint32_t> counts(q, 0);
  for (std::size_t i = 0; i < n; ++i) ++counts[text[i]];
  std::unordered_set<std::string> seen;
  auto key = [&counts, q] {
    return std::string(reinterpret_cast<const char*>(counts.data()),
                       q * sizeof(std::uint32_t));
  };
  seen.insert(key());
  for (std::size_t i = n; i < host_len; ++i) {
    ++counts[text[i]];
    --counts[text[i - n]];
    seen.insert(key());
  }
  return seen.size();
}

Counted Analyzer::abelian_complexity(std::size_t n) const {
  if (n == 0) return {1, true};
  if (n > host_.size()) return {0, false};
  std::uint64_t value = count_abelian(n, host_.size());
  bool converged = n <= half_len() && count_abelian(n, half_len()) == value;
  return {value, converged};
}

std::vector<Word> Analyzer::factors(std::size_t n) const {
  if (n == 0) return {Word(host_.alphabet())};
  if (n > host_.size()) return {};
  std::vector<Word> out;
  full_factors().for_each_group(
      n, [&](std::size_t rep, std::uint64_t, std::uint64_t, std::size_t) {
        out.push_back(host_.subword(rep, n));
      });
  return out;
}

std::vector<Word> Analyzer::palindromes(std::size_t n) const {
  if (n == 0) return {Word(host_.alphabet())};
  if (n > host_.size()) return {};
  std::vector<Word> out;
  const auto& pals = full_pals();
  for (std::size_t id = 2; id < pals.nodes.size(); ++id) {
    const auto& node = pals.nodes[id];
    if (static_cast<std::size_t>(node.len) == n) {
      out.push_back(host_.subword(node.end_pos - n + 1, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParikhVector> Analyzer::parikh_set(std::size_t n) const {
  std::size_t q = host_.alphabet().size();
  if (n == 0) {
    return {ParikhVector{std::vector<std::uint64_t>(q, 0)}};
  }
  if (n > host_.size()) return {};
  auto text = host_.letters();
  if (q == 2) {
    std::size_t cur = 0;
    for (std::size_t i = 0; i < n; ++i) cur += text[i] == 0;
    std::size_t lo = cur, hi = cur;
    for (std::size_t i = n; i < host_.size(); ++i) {
      cur += (text[i] == 0) - (text[i - n] == 0);
      lo = std::min(lo, cur);
      hi = std::max(hi, cur);
    }
    std::vector<ParikhVector> out;
    for (std::size_t c = lo; c <= hi; ++c) {
      out.push_back(ParikhVector{{c, n - c}});
    }
    return out;
  }
  std::vector<std::uint64_t> counts(q, 0);
  for (std::size_t i = 0; i < n; ++i) ++counts[text[i]];
  std::set<ParikhVector> seen;
  seen.insert(ParikhVector{counts});
  for (std::size_t i = n; i < host_.size(); ++i) {
    ++counts[text[i]];
    --counts[text[i - n]];
    seen.insert(ParikhVector{counts});
  }
  return {seen.begin(), seen.end()};
}

SpecialFactorReport Analyzer::special_factors(std::size_t n) const {
  if (n == 0) {
    throw InputError("special factors require n >= 1");
  }
  if (n > host_.size()) {
    throw BoundaryError("special factors at depth " + std::to_string(n) +
                        " exceed host length " + std::to_string(host_.size()));
  }
  SpecialFactorReport report;
  report.n = n;
  full_factors().for_each_group(
      n, [&](std::size_t rep, std::uint64_t right, std::uint64_t left,
             std::size_t) {
        auto rdeg = static_cast<std::uint32_t>(std::popcount(right));
        auto ldeg = static_cast<std::uint32_t>(std::popcount(left));
        report.right_delta_sum += static_cast<std::int64_t>(rdeg) - 1;
        report.left_delta_sum += static_cast<std::int64_t>(ldeg) - 1;
        if (rdeg > 1 || ldeg > 1) {
          Word factor = host_.subword(rep, n);
          if (rdeg > 1) report.right_special.emplace_back(factor, rdeg);
          if (ldeg > 1) report.left_special.emplace_back(factor, ldeg);
          if (rdeg > 1 && ldeg > 1) report.bispecial.push_back(factor);
        }
      });
  return report;
}

namespace {

struct BalanceScan {
  std::uint64_t alpha = 0;
  std::size_t n = 0;
  Letter letter = 0;
  std::size_t hi_pos = 0;
  std::size_t lo_pos = 0;
};

BalanceScan scan_balance(std::span<const Letter> text, std::size_t q,
                         std::size_t max_n) {
  BalanceScan best;
  std::size_t letters_to_scan = (q == 2) ? 1 : q;  // binary spreads mirror
  for (std::size_t n = 1; n <= std::min(max_n, text.size()); ++n) {
    for (std::size_t x = 0; x < letters_to_scan; ++x) {
      std::size_t cur = 0;
      for (std::size_t i = 0; i < n; ++i) cur += text[i] == x;
      std::size_t lo = cur, hi = cur, lo_pos = 0, hi_pos = 0;
      for (std::size_t i = n; i < text.size(); ++i) {
        cur += (text[i] == x) - (text[i - n] == x);
        if (cur < lo) {
          lo = cur;
          lo_pos = i - n + 1;
        }
        if (cur > hi) {
          hi = cur;
          hi_pos = i - n + 1;
        }
      }
      if (hi - lo > best.alpha) {
        best.alpha = hi - lo;
        best.n = n;
        best.letter = static_cast<Letter>(x);
        best.hi_pos = hi_pos;
        best.lo_pos = lo_pos;
      }
    }
  }
  return best;
}

}  // namespace

BalanceReport Analyzer::balance_coefficient(std::size_t max_n) const {
  if (max_n == 0) {
    throw InputError("balance scan requires max_n >= 1");
  }
  auto text = host_.letters();
  std::size_t q = host_.alphabet().size();
  BalanceScan full = scan_balance(text, q, max_n);
  BalanceScan half = scan_balance(text.subspan(0, half_len()), q, max_n);
  BalanceReport report;
  report.alpha = full.alpha;
  report.converged = full.alpha == half.alpha;
  if (full.alpha > 0) {
    report.witness_n = full.n;
    report.letter = host_.alphabet().symbol(full.letter);
    report.witness_hi = host_.subword(full.hi_pos, full.n);
    report.witness_lo = host_.subword(full.lo_pos, full.n);
  }
  return report;
}

RecurrenceReport Analyzer::modulo_recurrence(std::size_t n) const {
  if (n == 0) {
    throw InputError("modulo recurrence requires n >= 1");
  }
  RecurrenceReport report;
  report.n = n;
  if (n > host_.size()) {
    report.verdict = RecurrenceReport::Verdict::kInconclusive;
    return report;
  }
  auto text = host_.letters();
  std::size_t last_pos = host_.size() - n;

  report.factors = factors(n);
  std::unordered_map<std::string_view, std::size_t> ids;
  ids.reserve(report.factors.size());
  std::vector<std::string> keys;  // stable backing for the map keys
  keys.reserve(report.factors.size());
  for (std::size_t i = 0; i < report.factors.size(); ++i) {
    keys.push_back(std::string(
        reinterpret_cast<const char*>(report.factors[i].letters().data()), n));
    ids.emplace(keys.back(), i);
  }

  report.coverage.assign(report.factors.size(), std::vector<bool>(n, false));
  std::vector<bool> aligned_seen(report.factors.size(), false);
  for (std::size_t p = 0; p <= last_pos; ++p) {
    std::size_t id = ids.at(view_of(text, p, n));
    report.coverage[id][p % n] = true;
    if (p % n == 0) aligned_seen[id] = true;
  }
  report.window_set_equals_language =
      std::all_of(aligned_seen.begin(), aligned_seen.end(),
                  [](bool b) { return b; });

  std::size_t min_windows = last_pos / n + 1;  // residue 0 is the richest
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t cnt = (r <= last_pos) ? (last_pos - r) / n + 1 : 0;
    min_windows = std::min(min_windows, cnt);
  }
  report.min_windows_per_residue = min_windows;

  bool all_covered = true;
  for (const auto& row : report.coverage) {
    for (bool hit : row) {
      all_covered = all_covered && hit;
    }
  }
  if (all_covered) {
    report.verdict = RecurrenceReport::Verdict::kTrue;
  } else if (min_windows >= options_.recurrence_windows) {
    report.verdict = RecurrenceReport::Verdict::kFalse;
  } else {
    report.verdict = RecurrenceReport::Verdict::kInconclusive;
  }
  return report;
}

RichnessReport Analyzer::richness(std::size_t identity_max_n) const {
  RichnessReport report;
  const auto& pals = full_pals();
  std::size_t n = host_.size();
  report.prefix_palindromes.resize(n + 1);
  report.rich = true;
  for (std::size_t i = 0; i <= n; ++i) {
    report.prefix_palindromes[i] = pals.prefix_count[i] + 1;  // + empty word
    if (report.rich && pals.prefix_count[i] != i) {
      report.rich = false;
      report.first_violation = static_cast<std::ptrdiff_t>(i);
    }
  }
  std::size_t depth = identity_max_n > 0
                          ? identity_max_n
                          : std::min<std::size_t>(50, host_.size() / 4);
  report.identity_holds = true;
  for (std::size_t d = 1; d + 1 <= depth; ++d) {
    Counted p0 = factor_complexity(d);
    Counted p1 = factor_complexity(d + 1);
    Counted a0 = palindromic_complexity(d);
    Counted a1 = palindromic_complexity(d + 1);
    if (!(p0.converged && p1.converged && a0.converged && a1.converged)) {
      continue;
    }
    ++report.identity_depths_checked;
    bool holds = a0.value + a1.value == p1.value - p0.value + 2;
    report.identity_holds = report.identity_holds && holds;
  }
  return report;
}

std::vector<Word> Analyzer::return_words(const Word& factor) const {
  auto occ = occurrences(host_, factor);
  if (occ.positions.size() < 2) {
    throw InsufficientDataError(
        "return words need at least two occurrences; found " +
        std::to_string(occ.positions.size()));
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < occ.positions.size(); ++i) {
    out.push_back(host_.subword(occ.positions[i],
                                occ.positions[i + 1] - occ.positions[i]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ComplexityTable Analyzer::complexity_table(std::size_t n_min,
                                           std::size_t n_max) const {
  if (n_min < 1 || n_min > n_max) {
    throw InputError("complexity table requires 1 <= n_min <= n_max");
  }
  if (n_max > horizon() && !options_.force) {
    throw GuardError(
        "depth " + std::to_string(n_max) + " exceeds the analysis horizon " +
        std::to_string(horizon()) + " for a host of length " +
        std::to_string(host_.size()) + " (need length >= " +
        std::to_string(n_max * options_.horizon_divisor) + "); use force");
  }
  ComplexityTable table;
  table.rows.reserve(n_max - n_min + 1);
  for (std::size_t n = n_min; n <= n_max; ++n) {
    Counted p = factor_complexity(n);
    Counted pf = window_complexity(n);
    Counted pal = palindromic_complexity(n);
    Counted rho = abelian_complexity(n);
    table.rows.push_back({n, p.value, pf.value, pal.value, rho.value,
                          p.converged && pf.converged && pal.converged &&
                              rho.converged});
  }
  return table;
}

void ComplexityTable::write_csv(std::ostream& out) const {
  out << "n,p,pf,pal,rho_ab,converged\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.p << ',' << row.pf << ',' << row.pal << ','
        << row.rho_ab << ',' << (row.converged ? "true" : "false") << '\n';
  }
}

nlohmann::ordered_json ComplexityTable::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    arr.push_back({{"n", row.n},
                   {"p", row.p},
                   {"pf", row.pf},
                   {"pal", row.pal},
                   {"rho_ab", row.rho_ab},
                   {"converged", row.converged}});
  }
  return arr;
}

Counted factor_complexity(const Word& host, std::size_t n) {
  return Analyzer(host).factor_complexity(n);
}

Counted window_complexity(const Word& host, std::size_t n) {
  return Analyzer(host).window_complexity(n);
}

Counted palindromic_complexity(const Word& host, std::size_t n) {
  return Analyzer(host).palindromic_complexity(n);
}

Counted abelian_complexity(const Word& host, std::size_t n) {
  return Analyzer(host).abelian_complexity(n);
}

SpecialFactorReport special_factors(const Word& host, std::size_t n) {
  return Analyzer(host).special_factors(n);
}

BalanceReport balance_coefficient(const Word& host, std::size_t max_n) {
  return Analyzer(host).balance_coefficient(max_n);
}

RecurrenceReport modulo_recurrence(const Word& host, std::size_t n) {
  return Analyzer(host).modulo_recurrence(n);
}

RichnessReport richness_check(const Word& host) {
  return Analyzer(host).richness();
}

std::vector<Word> return_words(const Word& host, const Word& factor) {
  return Analyzer(host).return_words(factor);
}

}  // namespace wordca
