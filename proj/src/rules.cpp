#include "wordca/rules.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>

namespace wordca {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 24;

std::size_t checked_table_size(std::size_t q, std::uint32_t radius) {
  if (radius < 1) {
    throw InputError("rule radius must be >= 1");
  }
  std::size_t size = 1;
  for (std::uint32_t i = 0; i < radius; ++i) {
    if (size > kMaxTableSize / q) {
      throw InputError("rule table with alphabet size " + std::to_string(q) +
                       " and radius " + std::to_string(radius) +
                       " would be too large");
    }
    size *= q;
  }
  return size;
}

}  // namespace

LocalRule::LocalRule(Alphabet input, Alphabet output, std::uint32_t radius,
                     std::vector<Letter> table)
    : input_(std::move(input)),
      output_(std::move(output)),
      radius_(radius),
      table_(std::move(table)) {
  std::size_t expect = checked_table_size(input_.size(), radius_);
  if (table_.size() != expect) {
    throw InputError("rule table has " + std::to_string(table_.size()) +
                     " entries; expected " + std::to_string(expect));
  }
  for (Letter l : table_) {
    if (l >= output_.size()) {
      throw InputError("rule table entry outside the output alphabet");
    }
  }
}

LocalRule LocalRule::run_length(std::size_t l) {
  if (l < 1) {
    throw InputError("run-length rule requires l >= 1");
  }
  auto radius = static_cast<std::uint32_t>(l + 1);
  std::size_t size = checked_table_size(2, radius);
  // Index 0 is the all-a window; it alone outputs a.
  std::vector<Letter> table(size, 1);
  table[0] = 0;
  return LocalRule(Alphabet::binary(), Alphabet::binary(), radius,
                   std::move(table));
}

LocalRule LocalRule::invariant(const Alphabet& alphabet,
                               std::uint32_t radius) {
  std::size_t q = alphabet.size();
  std::size_t size = checked_table_size(q, radius);
  std::size_t stride = size / q;  // q^(r-1); leading digit = index / stride
  std::vector<Letter> table(size);
  for (std::size_t i = 0; i < size; ++i) {
    table[i] = static_cast<Letter>(i / stride);
  }
  return LocalRule(alphabet, alphabet, radius, std::move(table));
}

LocalRule LocalRule::exchange(const Alphabet& alphabet, std::uint32_t radius) {
  if (alphabet.size() != 2) {
    throw InputError("exchange rule requires a binary alphabet");
  }
  std::size_t size = checked_table_size(2, radius);
  std::size_t stride = size / 2;
  std::vector<Letter> table(size);
  for (std::size_t i = 0; i < size; ++i) {
    table[i] = static_cast<Letter>(1 - i / stride);
  }
  return LocalRule(alphabet, alphabet, radius, std::move(table));
}

LocalRule LocalRule::parse_table(std::istream& in, const Alphabet& input,
                                 const Alphabet& output) {
  std::vector<std::optional<Letter>> entries;
  std::uint32_t radius = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string window, out, extra;
    if (!(fields >> window)) continue;  // blank or comment-only line
    if (!(fields >> out) || (fields >> extra)) {
      throw RuleFormatError("line " + std::to_string(lineno) +
                            ": expected \"<window> <output-letter>\"");
    }
    if (out.size() != 1) {
      throw RuleFormatError("line " + std::to_string(lineno) +
                            ": output must be a single letter, got \"" + out +
                            "\"");
    }
    if (radius == 0) {
      radius = static_cast<std::uint32_t>(window.size());
      if (radius == 0) {
        throw RuleFormatError("line " + std::to_string(lineno) +
                              ": empty window");
      }
      entries.assign(checked_table_size(input.size(), radius), std::nullopt);
    } else if (window.size() != radius) {
      throw RuleFormatError(
          "line " + std::to_string(lineno) + ": window \"" + window +
          "\" has length " + std::to_string(window.size()) +
          " but earlier windows have length " + std::to_string(radius));
    }
    std::size_t index = 0;
    for (char c : window) {
      auto idx = input.index_of(c);
      if (!idx) {
        throw RuleFormatError("line " + std::to_string(lineno) +
                              ": window symbol '" + std::string(1, c) +
                              "' is not in alphabet \"" + input.symbols() +
                              "\"");
      }
      index = index * input.size() + *idx;
    }
    auto out_idx = output.index_of(out[0]);
    if (!out_idx) {
      throw RuleFormatError("line " + std::to_string(lineno) +
                            ": output symbol '" + out +
                            "' is not in alphabet \"" + output.symbols() +
                            "\"");
    }
    if (entries[index]) {
      throw RuleFormatError("line " + std::to_string(lineno) + ": window \"" +
                            window + "\" defined twice");
    }
    entries[index] = *out_idx;
  }
  if (radius == 0) {
    throw RuleFormatError("rule table is empty");
  }
  std::vector<std::string> missing;
  std::vector<Letter> table(entries.size());
  LocalRule probe = LocalRule::invariant(input, radius);  // window decoding
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i]) {
      if (missing.size() < 16) {
        missing.push_back(probe.window_at(i).to_text());
      }
      continue;
    }
    table[i] = *entries[i];
  }
  std::size_t missing_total =
      static_cast<std::size_t>(std::count(entries.begin(), entries.end(),
                                          std::optional<Letter>{}));
  if (missing_total > 0) {
    std::string msg = "rule table is missing " + std::to_string(missing_total) +
                      " window(s):";
    for (const auto& w : missing) msg += " " + w;
    if (missing_total > missing.size()) msg += " ...";
    throw RuleFormatError(msg, std::move(missing));
  }
  return LocalRule(input, output, radius, std::move(table));
}

Letter LocalRule::output(std::span<const Letter> window) const {
  std::size_t index = 0;
  for (Letter l : window) {
    index = index * input_.size() + l;
  }
  return table_[index];
}

Word LocalRule::window_at(std::size_t index) const {
  std::vector<Letter> letters(radius_);
  for (std::uint32_t i = radius_; i-- > 0;) {
    letters[i] = static_cast<Letter>(index % input_.size());
    index /= input_.size();
  }
  return Word(input_, std::move(letters));
}

Word apply(const LocalRule& rule, const Word& w) {
  if (!(w.alphabet() == rule.input_alphabet())) {
    throw InputError("word alphabet \"" + w.alphabet().symbols() +
                     "\" does not match rule input alphabet \"" +
                     rule.input_alphabet().symbols() + "\"");
  }
  std::size_t r = rule.radius();
  if (w.size() < r) {
    return Word(rule.output_alphabet());
  }
  auto s = w.letters();
  std::size_t q = rule.input_alphabet().size();
  std::size_t modulus = 1;
  for (std::size_t i = 0; i + 1 < r; ++i) modulus *= q;
  std::vector<Letter> out;
  out.reserve(w.size() - r + 1);
  // Rolling base-q window index: drop the leading digit, shift, add the new
  // trailing digit.
  std::size_t index = 0;
  for (std::size_t i = 0; i < r; ++i) index = index * q + s[i];
  out.push_back(rule.output_at(index));
  for (std::size_t i = r; i < s.size(); ++i) {
    index = (index % modulus) * q + s[i];
    out.push_back(rule.output_at(index));
  }
  return Word(rule.output_alphabet(), std::move(out));
}

RuleProfile profile(const LocalRule& rule) {
  RuleProfile p;
  std::size_t q = rule.input_alphabet().size();
  std::size_t size = rule.table_size();
  std::size_t stride = size / q;

  bool invariant = true;
  bool same_symbols =
      rule.input_alphabet().symbols() == rule.output_alphabet().symbols();
  for (std::size_t i = 0; i < size && invariant; ++i) {
    invariant = same_symbols && rule.output_at(i) == i / stride;
  }
  p.invariant = invariant;

  bool stable = true;
  for (std::size_t i = 0; i < size && stable; ++i) {
    Word w = rule.window_at(i);
    stable = rule.output_at(i) == apply(rule, reflect(w))[0];
  }
  p.stable = stable;

  // Outputs must agree exactly when first letters agree: constant per leading
  // letter, and the induced letter map injective.
  bool constant_per_head = true;
  for (std::size_t head = 0; head < q && constant_per_head; ++head) {
    Letter first = rule.output_at(head * stride);
    for (std::size_t i = head * stride; i < (head + 1) * stride; ++i) {
      if (rule.output_at(i) != first) {
        constant_per_head = false;
        break;
      }
    }
  }
  bool head_map_injective = true;
  if (constant_per_head) {
    for (std::size_t h1 = 0; h1 < q && head_map_injective; ++h1) {
      for (std::size_t h2 = h1 + 1; h2 < q; ++h2) {
        if (rule.output_at(h1 * stride) == rule.output_at(h2 * stride)) {
          head_map_injective = false;
          break;
        }
      }
    }
  }
  p.first_letter_determined = constant_per_head && head_map_injective;

  std::vector<bool> seen(rule.output_alphabet().size(), false);
  for (std::size_t i = 0; i < size; ++i) seen[rule.output_at(i)] = true;
  p.surjective = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });

  return p;
}

std::vector<Word> language_image(const LocalRule& rule, const Word& host,
                                 std::size_t n) {
  if (n < 1) {
    throw InputError("language image requires n >= 1");
  }
  std::size_t need = n + rule.radius() - 1;
  if (host.size() < need) {
    throw BoundaryError("host of length " + std::to_string(host.size()) +
                        " has no factors of length " + std::to_string(need));
  }
  auto fs = factor_set(host, need);
  std::vector<Word> images;
  images.reserve(fs.factors.size());
  for (const auto& f : fs.factors) {
    images.push_back(apply(rule, f));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

bool injective_on_language(const LocalRule& rule, const Word& host,
                           std::size_t n) {
  std::size_t need = n + rule.radius() - 1;
  auto fs = factor_set(host, need);
  if (fs.beyond_prefix) {
    throw BoundaryError("host of length " + std::to_string(host.size()) +
                        " has no factors of length " + std::to_string(need));
  }
  return language_image(rule, host, n).size() == fs.factors.size();
}

Word exchange_map(const Word& w) {
  if (w.alphabet().size() != 2) {
    throw InputError("letter transposition requires a binary alphabet");
  }
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter l : w.letters()) {
    letters.push_back(static_cast<Letter>(1 - l));
  }
  return Word(w.alphabet(), std::move(letters));
}

bool exchange_commutes(const LocalRule& rule, const Word& host) {
  return apply(rule, exchange_map(host)) == exchange_map(apply(rule, host));
}

namespace {

class ImageSource final : public PrefixSource {
 public:
  ImageSource(std::shared_ptr<const PrefixSource> base, LocalRule rule)
      : PrefixSource("image(" + base->id() + ")", rule.output_alphabet()),
        base_(std::move(base)),
        rule_(std::move(rule)) {
    if (!(base_->alphabet() == rule_.input_alphabet())) {
      throw InputError("source alphabet \"" + base_->alphabet().symbols() +
                       "\" does not match rule input alphabet \"" +
                       rule_.input_alphabet().symbols() + "\"");
    }
  }

 private:
  void extend(std::vector<Letter>& buf, std::size_t need) const override {
    Word pre = base_->prefix(need + rule_.radius() - 1);
    Word img = apply(rule_, pre);
    buf.assign(img.letters().begin(), img.letters().end());
  }

  std::shared_ptr<const PrefixSource> base_;
  LocalRule rule_;
};

}  // namespace

std::shared_ptr<const PrefixSource> image_source(
    std::shared_ptr<const PrefixSource> base, LocalRule rule) {
  return std::make_shared<ImageSource>(std::move(base), std::move(rule));
}

}  // namespace wordca
