#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "beatty/morphism.hpp"

using namespace beatty;

namespace {

Morphism fib() {
  return Morphism::from_rules({{"a", {"a", "b"}}, {"b", {"a"}}});
}

Morphism fib_mirror() {
  return Morphism::from_rules({{"a", {"b", "a"}}, {"b", {"a"}}});
}

}  // namespace

TEST_CASE("alphabet basics") {
  Alphabet ab({"a", "b"});
  CHECK(ab.size() == 2);
  CHECK(ab.contains("a"));
  CHECK_FALSE(ab.contains("c"));
  CHECK(ab.index_of("b") == 1);
  CHECK(ab.name_of(0) == "a");
  CHECK_THROWS_AS(ab.index_of("z"), std::invalid_argument);

  const Symbol c = ab.add("c");
  CHECK(c == 2);
  CHECK(ab.size() == 3);
  CHECK_THROWS_AS(ab.add("a"), std::invalid_argument);

  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({""}), std::invalid_argument);

  Alphabet digits({"2", "-3"});
  CHECK(digits.value_of(0) == 2);
  CHECK(digits.value_of(1) == -3);
  CHECK_THROWS_AS(ab.value_of(0), std::invalid_argument);
}

TEST_CASE("from_rules infers the codomain") {
  const auto f = fib();
  CHECK(f.is_endomorphism());
  CHECK(f.domain() == Alphabet({"a", "b"}));
  CHECK(f.image_of("a") == Word({0, 1}));
  CHECK(f.image_of("b") == Word({0}));

  const auto coding = Morphism::from_rules({{"a", {"1"}}, {"b", {"2"}}});
  CHECK_FALSE(coding.is_endomorphism());
  CHECK(coding.codomain() == Alphabet({"1", "2"}));
  CHECK(coding.is_coding());
  CHECK_FALSE(fib().is_coding());
}

TEST_CASE("parse and to_text round trip") {
  const std::string text =
      "# leading comment\n"
      "a -> a b   # trailing comment\n"
      "\n"
      "b -> a\n";
  const auto parsed = Morphism::parse(text);
  CHECK(parsed == fib());

  const auto again = Morphism::parse(parsed.to_text());
  CHECK(again == parsed);

  CHECK_THROWS_AS(Morphism::parse("a -> \n"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("a b c\n"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("a -> b\na -> a\n"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse(""), std::invalid_argument);
}

TEST_CASE("apply, composition, reversal") {
  const auto f = fib();
  CHECK(f.apply(Word({0, 1, 0})) == Word({0, 1, 0, 0, 1}));

  const auto f2 = compose_morphisms(f, f);
  CHECK(f2 == Morphism::from_rules({{"a", {"a", "b", "a"}}, {"b", {"a", "b"}}}));

  // mirror(f . f) applies right to left: (fbar . f)(a) = fbar(ab) = ba a.
  const auto g = compose_morphisms(fib_mirror(), f);
  CHECK(g == Morphism::from_rules({{"a", {"b", "a", "a"}}, {"b", {"b", "a"}}}));

  CHECK(time_reversal(f) == fib_mirror());
  CHECK(time_reversal(time_reversal(g)) == g);

  // Composition matches letters by name, not by index: swap_names declares
  // its letters in the order b, a.
  const auto swap_names = Morphism::from_rules({{"b", {"b"}}, {"a", {"a", "a"}}});
  CHECK(swap_names.image_of("a") == Word({1, 1}));
  const auto composed = compose_morphisms(swap_names, f);
  CHECK(composed.codomain() == Alphabet({"b", "a"}));
  CHECK(composed.image_of("a") == Word({1, 1, 0}));  // a a b over {b, a}
  CHECK(composed.image_of("b") == Word({1, 1}));

  const auto other = Morphism::from_rules({{"x", {"x", "y"}}, {"y", {"x"}}});
  CHECK_THROWS_AS(compose_morphisms(f, other), std::invalid_argument);
}

TEST_CASE("name_remap") {
  const Alphabet from({"a", "b"});
  const Alphabet to({"b", "a", "c"});
  CHECK(name_remap(from, to) == std::vector<Symbol>({1, 0}));
  CHECK_THROWS_AS(name_remap(to, from), std::invalid_argument);
}

TEST_CASE("fixed points stream") {
  const auto f = fib();
  CHECK(f.prolongable_on(0));
  CHECK_FALSE(f.prolongable_on(1));
  CHECK(f.default_seed() == 0);

  auto w = fixed_point(f);
  const Word prefix = w->take(13);
  Word expected;
  for (char ch : std::string("abaababaabaab")) expected.push_back(ch == 'a' ? 0 : 1);
  CHECK(prefix == expected);

  CHECK_THROWS_AS(fixed_point(f, 1), std::invalid_argument);

  const auto coding = Morphism::from_rules({{"a", {"1"}}, {"b", {"2"}}});
  CHECK_THROWS_AS(coding.default_seed(), std::invalid_argument);

  const auto numeric = Morphism::from_rules({{"1", {"1", "2"}}, {"2", {"1"}}});
  CHECK(fixed_point(numeric)->take_values(5) == std::vector<Int>({1, 2, 1, 1, 2}));
}

TEST_CASE("apply_morphism and literal_then") {
  const auto f = fib();
  const auto coding = Morphism::from_rules({{"a", {"1"}}, {"b", {"2"}}});
  auto coded = apply_morphism(coding, fixed_point(f));
  CHECK(coded->take_values(8) == std::vector<Int>({1, 2, 1, 1, 2, 1, 2, 1}));

  auto padded = literal_then(Word({1, 1}), fixed_point(f));
  const Word head = padded->take(5);
  CHECK(head == Word({1, 1, 0, 1, 0}));
}

TEST_CASE("decorate expands letterwise") {
  const auto f = fib();
  const auto deco =
      Morphism::from_rules({{"a", {"2", "1"}}, {"b", {"3"}}});
  auto w = decorate(f, 0, deco);
  // x = a b a a b ... so the stream reads 21 3 21 21 3 ...
  CHECK(w->take_values(8) == std::vector<Int>({2, 1, 3, 2, 1, 2, 1, 3}));
}

TEST_CASE("block recoding of sliding windows") {
  const auto f = fib();
  BlockCoding coding;
  coding.block_alphabet = Alphabet({"aba", "baa", "aab", "bab"});
  coding.code[Word({0, 1, 0})] = 0;
  coding.code[Word({1, 0, 0})] = 1;
  coding.code[Word({0, 0, 1})] = 2;
  coding.code[Word({1, 0, 1})] = 3;

  // Windows over x = abaababaabaab: aba baa aab aba bab aba baa aab aba ...
  auto blocks = block_recode(fixed_point(f), 3, coding);
  CHECK(blocks->take(11) == Word({0, 1, 2, 0, 3, 0, 1, 2, 0, 1, 2}));

  BlockCoding partial = coding;
  partial.code.erase(Word({1, 0, 1}));
  auto broken = block_recode(fixed_point(f), 3, partial);
  broken->take(4);
  CHECK_THROWS(broken->take(1));
}

TEST_CASE("k_block_morphism matches direct recoding") {
  const auto f = fib();
  BlockCoding coding;
  coding.block_alphabet = Alphabet({"aba", "baa", "aab", "bab"});
  coding.code[Word({0, 1, 0})] = 0;
  coding.code[Word({1, 0, 0})] = 1;
  coding.code[Word({0, 0, 1})] = 2;
  coding.code[Word({1, 0, 1})] = 3;

  const auto induced = k_block_morphism(f, 0, 3, coding);
  CHECK(induced.is_endomorphism());
  CHECK(induced.prolongable_on(0));

  auto direct = block_recode(fixed_point(f), 3, coding);
  auto via_morphism = fixed_point(induced, 0);
  const auto cmp = word_equal_prefix(*direct, *via_morphism, 2000);
  CHECK(cmp.equal);

  BlockCoding partial = coding;
  partial.code.erase(Word({1, 0, 1}));
  CHECK_THROWS(k_block_morphism(f, 0, 3, partial));
}

TEST_CASE("decorated_to_morphic preserves the stream") {
  const auto f = fib();
  const auto deco = Morphism::from_rules({{"a", {"2", "1"}}, {"b", {"3"}}});

  const MorphicWord m = decorated_to_morphic(f, 0, deco);
  CHECK(m.coding.is_coding());
  CHECK(m.base.prolongable_on(m.seed));

  auto direct = decorate(f, 0, deco);
  auto rebuilt = m.generate();
  CHECK(word_equal_prefix(*direct, *rebuilt, 3000).equal);
}

TEST_CASE("decorated_to_morphic squares when images are short") {
  const auto f = fib();
  // |deco(b)| = 4 exceeds the block supply of f(b) = a, forcing the base to
  // be squared before block images can be chunked.
  const auto deco = Morphism::from_rules({{"a", {"1"}}, {"b", {"2", "3", "4", "5"}}});

  const MorphicWord m = decorated_to_morphic(f, 0, deco);
  auto direct = decorate(f, 0, deco);
  auto rebuilt = m.generate();
  CHECK(word_equal_prefix(*direct, *rebuilt, 3000).equal);
}

TEST_CASE("word_equal_prefix reports the first mismatch") {
  const auto f = fib();
  auto w1 = fixed_point(f);
  auto w2 = literal_then(Word({0, 1}), fixed_point(f));
  // w1 = a b a a b ...; w2 = a b a b a ...
  const auto cmp = word_equal_prefix(*w1, *w2, 100);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.mismatch_index == 4);

  auto w3 = fixed_point(f);
  auto w4 = fixed_point(f);
  CHECK(word_equal_prefix(*w3, *w4, 500).equal);
}

TEST_CASE("parse_by_code tokenizes uniquely") {
  const auto f = fib();
  // The fixed point is a concatenation of "ab" and "a" tokens.
  const std::vector<Word> code = {Word({0, 1}), Word({0})};
  auto tokens = parse_by_code(fixed_point(f), code, Alphabet({"1", "2"}));
  CHECK(tokens->take_values(8) == std::vector<Int>({1, 2, 1, 1, 2, 1, 2, 1}));

  // All-a stream: both "a" and "aa" always fit, so the parse is ambiguous.
  const auto doubler = Morphism::from_rules({{"a", {"a", "a"}}});
  const std::vector<Word> ambiguous = {Word({0}), Word({0, 0})};
  auto bad = parse_by_code(fixed_point(doubler), ambiguous, Alphabet({"1", "2"}));
  CHECK_THROWS(bad->next());

  // No code word matches ab... at all: a dead end.
  const std::vector<Word> stuck = {Word({0, 0})};
  auto dead = parse_by_code(fixed_point(f), stuck, Alphabet({"1"}));
  CHECK_THROWS(dead->next());
}
