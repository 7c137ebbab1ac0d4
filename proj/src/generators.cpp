#include "wordca/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace wordca {

Word PrefixSource::prefix(std::size_t n) const {
  std::scoped_lock lock(mutex_);
  if (cache_.size() < n) {
    extend(cache_, n);
  }
  if (cache_.size() < n) {
    throw BoundaryError("source \"" + id_ + "\" could not produce " +
                        std::to_string(n) + " letters");
  }
  return Word(alphabet_,
              std::vector<Letter>(cache_.begin(), cache_.begin() + n));
}

namespace {

class FibonacciSource final : public PrefixSource {
 public:
  FibonacciSource() : PrefixSource("fibonacci", Alphabet::binary()) {}

 private:
  void extend(std::vector<Letter>& buf, std::size_t need) const override {
    // phi^(k+1)(a) = phi^k(a) phi^(k-1)(a), so successive iterates extend
    // each other and the fixed point is the limit.
    std::vector<Letter> prev = {0};     // phi^0(a) = a
    std::vector<Letter> cur = {0, 1};   // phi^1(a) = ab
    while (cur.size() < need) {
      std::vector<Letter> next = cur;
      next.insert(next.end(), prev.begin(), prev.end());
      prev = std::move(cur);
      cur = std::move(next);
    }
    buf = std::move(cur);
  }
};

void validate_directive(const DirectiveSequence& d) {
  if (d.coefficients.empty()) {
    throw InputError("directive sequence must not be empty");
  }
  for (auto c : d.coefficients) {
    if (c < 1) {
      throw InputError("directive coefficients must all be >= 1");
    }
  }
}

class CharacteristicSturmianSource final : public PrefixSource {
 public:
  explicit CharacteristicSturmianSource(DirectiveSequence directive)
      : PrefixSource(directive_id(directive), Alphabet::binary()),
        directive_(std::move(directive)) {
    validate_directive(directive_);
  }

 private:
  static std::string directive_id(const DirectiveSequence& d) {
    std::string id = "sturmian(";
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
      if (i) id.push_back(',');
      id += std::to_string(d.coefficients[i]);
    }
    if (d.cyclic) id += ",...";
    id.push_back(')');
    return id;
  }

  void extend(std::vector<Letter>& buf, std::size_t need) const override {
    std::vector<Letter> prev = {1};  // s(-1) = b
    std::vector<Letter> cur = {0};   // s(0)  = a
    std::size_t k = 0;
    while (cur.size() < need) {
      if (k >= directive_.coefficients.size() && !directive_.cyclic) {
        // The standard sequence certifies exactly |s(last)| letters; any
        // continuation of the directive agrees on that prefix and no further.
        // Estimate the shortfall against the slowest possible growth (all-1
        // coefficients, golden-ratio rate).
        double ratio = static_cast<double>(need) /
                       static_cast<double>(std::max<std::size_t>(cur.size(), 1));
        double phi = 0.5 * (1.0 + std::sqrt(5.0));
        auto extra = static_cast<std::size_t>(
            std::ceil(std::log(ratio) / std::log(phi)));
        extra = std::max<std::size_t>(extra, 1);
        throw DirectiveExhaustedError(
            "directive sequence with " +
                std::to_string(directive_.coefficients.size()) +
                " coefficients certifies only " + std::to_string(cur.size()) +
                " letters, fewer than the requested " + std::to_string(need) +
                "; at least " + std::to_string(extra) +
                " more coefficients are required",
            extra);
      }
      std::uint32_t d =
          directive_.coefficients[k % directive_.coefficients.size()];
      ++k;
      std::vector<Letter> next;
      next.reserve(cur.size() * d + prev.size());
      for (std::uint32_t i = 0; i < d; ++i) {
        next.insert(next.end(), cur.begin(), cur.end());
      }
      next.insert(next.end(), prev.begin(), prev.end());
      prev = std::move(cur);
      cur = std::move(next);
    }
    buf = std::move(cur);
  }

  DirectiveSequence directive_;
};

class ASturmianSource final : public PrefixSource {
 public:
  explicit ASturmianSource(ASturmianParams params)
      : PrefixSource(params_id(params), Alphabet::binary()),
        params_(std::move(params)) {
    if (params_.l < 1) {
      throw InputError("a-Sturmian block parameter l must be >= 1");
    }
    if (params_.l0 > params_.l + 1) {
      throw InputError("a-Sturmian head length l0 must satisfy l0 <= l + 1");
    }
    if (!params_.epsilon) {
      throw InputError("a-Sturmian epsilon source must be set");
    }
    if (params_.epsilon->alphabet().symbols() != "01") {
      throw InputError(
          "a-Sturmian epsilon source must be over {0, 1}; got alphabet \"" +
          params_.epsilon->alphabet().symbols() + "\"");
    }
  }

 private:
  static std::string params_id(const ASturmianParams& p) {
    std::string eps = p.epsilon ? p.epsilon->id() : "?";
    return "asturmian(l0=" + std::to_string(p.l0) +
           ",l=" + std::to_string(p.l) + ",eps=" + eps + ")";
  }

  void extend(std::vector<Letter>& buf, std::size_t need) const override {
    std::size_t blocks = need / (params_.l + 1) + 2;
    Word eps = params_.epsilon->prefix(blocks);
    std::vector<Letter> out;
    out.reserve(need + params_.l + 2);
    out.insert(out.end(), params_.l0, 0);
    out.push_back(1);
    for (std::size_t i = 0; out.size() < need; ++i) {
      std::size_t run = params_.l + (eps[i] == 1 ? 1 : 0);
      out.insert(out.end(), run, 0);
      out.push_back(1);
    }
    buf = std::move(out);
  }

  ASturmianParams params_;
};

class ChampernowneSource final : public PrefixSource {
 public:
  ChampernowneSource() : PrefixSource("champernowne", Alphabet::digits01()) {}

 private:
  void extend(std::vector<Letter>& buf, std::size_t need) const override {
    std::vector<Letter> out;
    out.reserve(need + 64);
    for (std::uint64_t k = 0; out.size() < need; ++k) {
      if (k == 0) {
        out.push_back(0);
        continue;
      }
      int top = 63 - std::countl_zero(k);
      for (int bit = top; bit >= 0; --bit) {
        out.push_back(static_cast<Letter>((k >> bit) & 1));
      }
    }
    buf = std::move(out);
  }
};

class PeriodicSource final : public PrefixSource {
 public:
  explicit PeriodicSource(Word seed)
      : PrefixSource("periodic(" + seed.to_text() + ")", seed.alphabet()),
        seed_(std::move(seed)) {
    if (seed_.empty()) {
      throw InputError("periodic source requires a non-empty seed");
    }
  }

 private:
  void extend(std::vector<Letter>& buf, std::size_t need) const override {
    buf.reserve(need + seed_.size());
    while (buf.size() < need) {
      buf.insert(buf.end(), seed_.letters().begin(), seed_.letters().end());
    }
  }

  Word seed_;
};

class BitsView final : public PrefixSource {
 public:
  BitsView(std::shared_ptr<const PrefixSource> base, bool invert)
      : PrefixSource(base->id() + (invert ? "10" : "01"),
                     Alphabet::digits01()),
        base_(std::move(base)),
        invert_(invert) {
    if (base_->alphabet().size() != 2) {
      throw InputError("bit view requires a binary source; \"" + base_->id() +
                       "\" is over alphabet \"" + base_->alphabet().symbols() +
                       "\"");
    }
  }

 private:
  void extend(std::vector<Letter>& buf, std::size_t need) const override {
    Word w = base_->prefix(need);
    std::vector<Letter> out;
    out.reserve(need);
    for (Letter l : w.letters()) {
      // Letter 0 of the base reads as bit 1 unless inverted.
      bool one = (l == 0) != invert_;
      out.push_back(one ? 1 : 0);
    }
    buf = std::move(out);
  }

  std::shared_ptr<const PrefixSource> base_;
  bool invert_;
};

}  // namespace

std::shared_ptr<const PrefixSource> fibonacci_source() {
  return std::make_shared<FibonacciSource>();
}

std::shared_ptr<const PrefixSource> characteristic_sturmian_source(
    DirectiveSequence directive) {
  return std::make_shared<CharacteristicSturmianSource>(std::move(directive));
}

std::shared_ptr<const PrefixSource> a_sturmian_source(ASturmianParams params) {
  return std::make_shared<ASturmianSource>(std::move(params));
}

std::shared_ptr<const PrefixSource> champernowne_source() {
  return std::make_shared<ChampernowneSource>();
}

std::shared_ptr<const PrefixSource> periodic_source(Word seed) {
  return std::make_shared<PeriodicSource>(std::move(seed));
}

std::shared_ptr<const PrefixSource> as_bits(
    std::shared_ptr<const PrefixSource> base, bool invert) {
  return std::make_shared<BitsView>(std::move(base), invert);
}

Word fibonacci(std::size_t n) { return fibonacci_source()->prefix(n); }

Word characteristic_sturmian(const DirectiveSequence& directive,
                             std::size_t n) {
  return characteristic_sturmian_source(directive)->prefix(n);
}

Word a_sturmian(const ASturmianParams& params, std::size_t n) {
  return a_sturmian_source(params)->prefix(n);
}

Word champernowne(std::size_t n) { return champernowne_source()->prefix(n); }

Word periodic(const Word& seed, std::size_t n) {
  return periodic_source(seed)->prefix(n);
}

}  // namespace wordca
