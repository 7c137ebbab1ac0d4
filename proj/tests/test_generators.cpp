#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <thread>
#include <vector>

#include "wordca/errors.hpp"
#include "wordca/generators.hpp"
#include "wordca/word.hpp"

using namespace wordca;

namespace {

bool is_prefix_of(const Word& shorter, const Word& longer) {
  return shorter.size() <= longer.size() &&
         longer.prefix(shorter.size()) == shorter;
}

}  // namespace

TEST_CASE("fibonacci fixed point of a->ab, b->a") {
  CHECK(fibonacci(0).to_text().empty());
  CHECK(fibonacci(1).to_text() == "a");
  CHECK(fibonacci(2).to_text() == "ab");
  CHECK(fibonacci(5).to_text() == "abaab");
  CHECK(fibonacci(8).to_text() == "abaababa");
  CHECK(fibonacci(13).to_text() == "abaababaabaab");

  // Substitution fixed point: applying a->ab, b->a to the word reproduces it.
  const std::string w = fibonacci(400).to_text();
  std::string expanded;
  for (char c : w) expanded += (c == 'a') ? "ab" : "a";
  CHECK(expanded.substr(0, 400) == w);
}

TEST_CASE("prefix coherence across requests of different lengths") {
  const auto sources = {fibonacci_source(), champernowne_source(),
                        periodic_source(Word::from_text(Alphabet::binary(),
                                                        "abaab")),
                        characteristic_sturmian_source({{2, 1, 1}, true})};
  for (const auto& src : sources) {
    CAPTURE(src->id());
    const Word longer = src->prefix(500);
    CHECK(is_prefix_of(src->prefix(0), longer));
    CHECK(is_prefix_of(src->prefix(1), longer));
    CHECK(is_prefix_of(src->prefix(37), longer));
    CHECK(is_prefix_of(src->prefix(499), longer));
    // Shrinking after growing must replay the cached prefix unchanged.
    CHECK(is_prefix_of(src->prefix(100), longer));
  }
}

TEST_CASE("characteristic word with all-1 directives is fibonacci") {
  const DirectiveSequence ones{{1}, true};
  CHECK(characteristic_sturmian(ones, 300) == fibonacci(300));
}

TEST_CASE("characteristic word of the cyclic (2,1,1) directive") {
  const DirectiveSequence d{{2, 1, 1}, true};
  CHECK(characteristic_sturmian(d, 20).to_text() == "aabaaabaabaaabaabaaa");
}

TEST_CASE("finite directives certify a bounded prefix then fail loudly") {
  const DirectiveSequence d{{2}, false};
  CHECK(characteristic_sturmian(d, 3).to_text() == "aab");
  CHECK_THROWS_AS(characteristic_sturmian(d, 4), DirectiveExhaustedError);
  try {
    characteristic_sturmian({{1, 1}, false}, 5000);
    FAIL("expected DirectiveExhaustedError");
  } catch (const DirectiveExhaustedError& e) {
    CHECK(e.extra_coefficients_needed >= 1);
  }

  CHECK_THROWS_AS(characteristic_sturmian_source({{}, true}), InputError);
  CHECK_THROWS_AS(characteristic_sturmian_source({{1, 0}, true}), InputError);
}

TEST_CASE("block-form word reproduces fibonacci from its own bit stream") {
  // With head a^1 and body a^(1+e_i), the fibonacci bit stream rebuilds the
  // fibonacci word itself.
  ASturmianParams params;
  params.l0 = 1;
  params.l = 1;
  params.epsilon = as_bits(fibonacci_source());
  CHECK(a_sturmian(params, 13).to_text() == "abaababaabaab");
  CHECK(a_sturmian(params, 2000) == fibonacci(2000));
}

TEST_CASE("block-form run structure follows l0 and l") {
  ASturmianParams params;
  params.l0 = 0;
  params.l = 2;
  params.epsilon = periodic_source(Word::from_text(Alphabet::digits01(),
                                                   "0110"));
  const std::string w = a_sturmian(params, 60).to_text();
  CHECK(w.front() == 'b');  // empty head
  // e = 0,1,1,0,... so the a-runs between b letters go 2,3,3,2,...
  CHECK(w.substr(0, 14) == "baabaaabaaabaa");

  params.l0 = 3;  // l + 1 is the largest legal head
  const std::string v = a_sturmian(params, 14).to_text();
  CHECK(v.substr(0, 6) == "aaabaa");

  std::size_t run = 0;
  std::size_t max_a_run = 0;
  for (char c : w) {
    run = (c == 'a') ? run + 1 : 0;
    max_a_run = std::max(max_a_run, run);
  }
  CHECK(max_a_run == 3);  // never more than l + 1 consecutive a
}

TEST_CASE("block-form parameter validation") {
  ASturmianParams params;
  params.epsilon = as_bits(fibonacci_source());

  params.l = 0;
  CHECK_THROWS_AS(a_sturmian(params, 10), InputError);

  params.l = 2;
  params.l0 = 4;  // above l + 1
  CHECK_THROWS_AS(a_sturmian(params, 10), InputError);

  params.l0 = 1;
  params.epsilon = nullptr;
  CHECK_THROWS_AS(a_sturmian(params, 10), InputError);
}

TEST_CASE("champernowne concatenates binary expansions of 0, 1, 2, ...") {
  CHECK(champernowne(1).to_text() == "0");
  CHECK(champernowne(2).to_text() == "01");
  CHECK(champernowne(6).to_text() == "011011");
  CHECK(champernowne(18).to_text() == "011011100101110111");
  // 0 1 10 11 100 101 110 111 1000 ...
  CHECK(champernowne(22).to_text() == "0110111001011101111000");
}

TEST_CASE("periodic source repeats its seed") {
  const Word seed = Word::from_text(Alphabet::binary(), "ab");
  CHECK(periodic(seed, 7).to_text() == "abababa");
  CHECK(periodic(Word::from_text(Alphabet::binary(), "abaab"), 12).to_text() ==
        "abaababaabab");
  CHECK_THROWS_AS(periodic_source(Word(Alphabet::binary())), InputError);
}

TEST_CASE("bit view maps the first alphabet letter to 1 unless inverted") {
  CHECK(as_bits(fibonacci_source())->prefix(8).to_text() == "10110101");
  CHECK(as_bits(fibonacci_source(), true)->prefix(8).to_text() == "01001010");
  CHECK(as_bits(fibonacci_source())->alphabet() == Alphabet::digits01());
  CHECK(as_bits(fibonacci_source())->id() !=
        as_bits(fibonacci_source(), true)->id());
}

TEST_CASE("source ids name the construction") {
  CHECK(fibonacci_source()->id() == "fibonacci");
  CHECK(champernowne_source()->id() == "champernowne");
  CHECK(characteristic_sturmian_source({{2, 1, 1}, true})->id() ==
        "sturmian(2,1,1,...)");
}

TEST_CASE("concurrent prefix requests agree with sequential ones") {
  auto src = fibonacci_source();
  Word a, b;
  std::thread ta([&] { a = src->prefix(5000); });
  std::thread tb([&] { b = src->prefix(7000); });
  ta.join();
  tb.join();
  CHECK(a == fibonacci(5000));
  CHECK(b == fibonacci(7000));
}
