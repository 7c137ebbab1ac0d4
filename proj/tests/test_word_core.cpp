#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wordca/errors.hpp"
#include "wordca/word.hpp"

using namespace wordca;

namespace {

Word ab(const std::string& text) {
  return Word::from_text(Alphabet::binary(), text);
}

std::string random_text(std::mt19937& rng, const std::string& symbols,
                        std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(symbols[pick(rng)]);
  return out;
}

std::set<std::string> texts(const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.to_text());
  return out;
}

}  // namespace

TEST_CASE("alphabet construction and lookup") {
  const Alphabet& bin = Alphabet::binary();
  CHECK(bin.size() == 2);
  CHECK(bin.symbol(0) == 'a');
  CHECK(bin.symbol(1) == 'b');
  CHECK(bin.symbols() == "ab");
  CHECK(bin.index_of('a') == std::optional<Letter>{0});
  CHECK(bin.index_of('z') == std::nullopt);
  CHECK(bin.require('b') == Letter{1});
  CHECK_THROWS_AS(bin.require('z'), InputError);

  CHECK(Alphabet::digits01().symbols() == "01");
  CHECK(Alphabet::from_symbols("xyz").size() == 3);
  CHECK_THROWS_AS(Alphabet::from_symbols(""), InputError);
  CHECK_THROWS_AS(Alphabet::from_symbols("aba"), InputError);
}

TEST_CASE("word text round trip and foreign symbols") {
  const Word w = ab("abaab");
  CHECK(w.size() == 5);
  CHECK(w.to_text() == "abaab");
  CHECK(w[0] == 0);
  CHECK(w[1] == 1);
  CHECK(ab("").empty());
  CHECK_THROWS_AS(ab("abca"), InputError);
  CHECK_THROWS_AS(Word::from_text(Alphabet::digits01(), "ab"), InputError);
}

TEST_CASE("subword, prefix, append") {
  const Word w = ab("abaababa");
  CHECK(w.subword(2, 3).to_text() == "aab");
  CHECK(w.prefix(0).to_text().empty());
  CHECK(w.prefix(5).to_text() == "abaab");
  CHECK(w.subword(8, 0).to_text().empty());
  CHECK_THROWS_AS(w.subword(7, 2), BoundaryError);
  CHECK_THROWS_AS(w.subword(9, 0), BoundaryError);

  CHECK(ab("ab").append(ab("ba")).to_text() == "abba");
  const Word digits = Word::from_text(Alphabet::digits01(), "01");
  CHECK_THROWS_AS(ab("ab").append(digits), InputError);
}

TEST_CASE("word comparison orders letters lexicographically") {
  CHECK(ab("ab") == ab("ab"));
  CHECK(ab("a") < ab("ab"));
  CHECK(ab("ab") < ab("b"));
  CHECK(ab("ba") > ab("ab"));

  std::vector<Word> v = {ab("b"), ab("ab"), ab("a"), ab("ba")};
  std::sort(v.begin(), v.end());
  CHECK(texts(v) == std::set<std::string>{"a", "ab", "b", "ba"});
  CHECK(v.front().to_text() == "a");
  CHECK(v.back().to_text() == "ba");
}

TEST_CASE("reflect is an involution and reverses text") {
  CHECK(reflect(ab("aab")).to_text() == "baa");
  CHECK(reflect(ab("")).to_text().empty());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::string text = random_text(rng, "ab", 1 + rng() % 40);
    const Word w = ab(text);
    std::string reversed(text.rbegin(), text.rend());
    CHECK(reflect(w).to_text() == reversed);
    CHECK(reflect(reflect(w)) == w);
  }
}

TEST_CASE("palindrome predicate matches the naive check") {
  CHECK(is_palindrome(ab("")));
  CHECK(is_palindrome(ab("a")));
  CHECK(is_palindrome(ab("abba")));
  CHECK_FALSE(is_palindrome(ab("abab")));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = random_text(rng, "ab", rng() % 12);
    CHECK(is_palindrome(ab(text)) == oracle::is_palindrome(text));
  }
}

TEST_CASE("parikh vector counts letters in alphabet order") {
  const ParikhVector pv = parikh_vector(ab("abaab"));
  CHECK(pv.counts == std::vector<std::uint64_t>{3, 2});
  CHECK(pv.sum() == 5);

  ParikhVector acc = parikh_vector(ab("ab"));
  acc += parikh_vector(ab("bb"));
  CHECK(acc.counts == std::vector<std::uint64_t>{1, 3});

  const Word xyz = Word::from_text(Alphabet::from_symbols("xyz"), "zzxy");
  CHECK(parikh_vector(xyz).counts == std::vector<std::uint64_t>{1, 1, 2});
}

TEST_CASE("factor sets are sorted, deduplicated, and flag truncation") {
  const Word w = ab("abaab");
  const FactorSet f2 = factor_set(w, 2);
  CHECK(texts(f2.factors) == std::set<std::string>{"aa", "ab", "ba"});
  CHECK(std::is_sorted(f2.factors.begin(), f2.factors.end()));
  CHECK_FALSE(f2.beyond_prefix);

  CHECK(factor_set(w, 0).factors.size() == 1);
  CHECK(factor_set(w, 0).factors[0].empty());
  CHECK(factor_set(w, 5).factors.size() == 1);

  const FactorSet fbig = factor_set(w, 6);
  CHECK(fbig.factors.empty());
  CHECK(fbig.beyond_prefix);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::string text = random_text(rng, "ab", 5 + rng() % 60);
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
      CHECK(texts(factor_set(ab(text), n).factors) ==
            oracle::factors(text, n));
    }
  }
}

TEST_CASE("occurrences reports every start position including overlaps") {
  const OccurrenceSet occ = occurrences(ab("aabaabaa"), ab("aa"));
  CHECK(occ.positions == std::vector<std::size_t>{0, 3, 6});
  CHECK(occurrences(ab("abab"), ab("bb")).positions.empty());
  CHECK_THROWS_AS(occurrences(ab("ab"), ab("")), InputError);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::string host = random_text(rng, "ab", 10 + rng() % 50);
    const std::string needle = random_text(rng, "ab", 1 + rng() % 4);
    CHECK(occurrences(ab(host), ab(needle)).positions ==
          oracle::occurrence_positions(host, needle));
  }
}

TEST_CASE("max_run and max_power agree with direct scans") {
  CHECK(max_run(ab("abaabbba"), 'b') == 3);
  CHECK(max_run(ab("aaaa"), 'b') == 0);
  CHECK(max_power(ab("ababab"), ab("ab")) == 3);
  CHECK(max_power(ab("abaababaab"), ab("ab")) == 2);
  CHECK(max_power(ab("bbb"), ab("a")) == 0);
  CHECK_THROWS_AS(max_power(ab("ab"), ab("")), InputError);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::string host = random_text(rng, "ab", 10 + rng() % 80);
    CHECK(max_run(ab(host), 'a') == oracle::max_run(host, 'a'));
    CHECK(max_run(ab(host), 'b') == oracle::max_run(host, 'b'));
    const std::string block = random_text(rng, "ab", 1 + rng() % 3);
    CHECK(max_power(ab(host), ab(block)) == oracle::max_power(host, block));
  }
}
