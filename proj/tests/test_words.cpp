#include <doctest.h>

#include "support.hpp"

using namespace cbqo;
using testing::w;

TEST_CASE("free reduction examples") {
  CHECK(free_reduce(w("xX")).empty());
  CHECK(free_reduce(w("xyYx")) == w("xx"));
  CHECK(free_reduce(w("-")).empty());
  CHECK(is_freely_reduced(w("xyx")));
  CHECK_FALSE(is_freely_reduced(w("xyYx")));
}

TEST_CASE("free reduction agrees with pair deletion and is idempotent") {
  auto g       = testing::rng(1);
  auto letters = testing::signed_letters({"x", "y"});
  for (int i = 0; i < 100; ++i) {
    Word a = testing::random_word(g, letters, testing::pick(g, 0, 12));
    Word r = free_reduce(a);
    CHECK(r == testing::naive_reduce(a));
    CHECK(free_reduce(r) == r);
    CHECK(is_freely_reduced(r));
  }
}

TEST_CASE("cyclic reduction examples") {
  auto c1 = cyclic_reduce(w("abA"));
  CHECK(c1.conjugator == w("a"));
  CHECK(c1.core.representative() == w("b"));
  auto c2 = cyclic_reduce(w("abcBA"));
  CHECK(c2.conjugator == w("ab"));
  CHECK(c2.core.representative() == w("c"));
  auto c3 = cyclic_reduce(w("ab"));
  CHECK(c3.conjugator.empty());
  CHECK(c3.core.representative() == w("ab"));
}

TEST_CASE("cyclic reduction conjugates back to the reduced word") {
  auto g       = testing::rng(2);
  auto letters = testing::signed_letters({"a", "b", "c"});
  for (int i = 0; i < 300; ++i) {
    Word a = free_reduce(testing::random_word(g, letters, testing::pick(g, 1, 14)));
    if (a.empty()) {
      continue;
    }
    auto cr   = cyclic_reduce(a);
    Word back = free_reduce(concat(concat(cr.conjugator, cr.core.representative()),
                                   invert(cr.conjugator)));
    CHECK(back == a);
    CHECK(is_cyclically_reduced(cr.core.representative()));
  }
}

TEST_CASE("rotations, inversion and concatenation") {
  CHECK(rotations(w("xy")) == std::set<Word>{w("xy"), w("yx")});
  CHECK(rotations(w("xxx")) == std::set<Word>{w("xxx")});
  CHECK(invert(w("xy")) == w("YX"));
  CHECK(concat(w("x"), w("X")) == w("xX"));
  CHECK(multiply(w("x"), w("X")).empty());
  CHECK(power(w("xy"), -2) == w("YXYX"));
  CHECK(power(w("xy"), 0).empty());
}

TEST_CASE("canonical cyclic word is the least rotation") {
  auto g       = testing::rng(3);
  auto letters = testing::signed_letters({"x", "y"});
  for (int i = 0; i < 300; ++i) {
    Word a = testing::random_cyclically_reduced(g, letters, testing::pick(g, 1, 10));
    Word least = a;
    for (std::size_t k = 0; k < a.size(); ++k) {
      least = std::min(least, testing::naive_rotate(a, k));
      CHECK(rotate(a, k) == testing::naive_rotate(a, k));
    }
    CHECK(CyclicWord(a).representative() == least);
    CHECK(is_rotation_of(a, least));
  }
}

TEST_CASE("common prefix and subword search") {
  CHECK(max_common_prefix(w("xxxxxy"), w("xxxxxx")) == 5);
  CHECK(max_common_prefix(w("x"), w("y")) == 0);
  CHECK(max_common_prefix(w("xyx"), w("xyx")) == 3);
  auto g       = testing::rng(4);
  auto letters = testing::signed_letters({"x", "y"});
  for (int i = 0; i < 300; ++i) {
    Word hay    = testing::random_word(g, letters, testing::pick(g, 0, 10));
    Word needle = testing::random_word(g, letters, testing::pick(g, 0, 3));
    CHECK(contains_subword(hay, needle) == testing::naive_contains(hay, needle));
  }
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(w("xxxxxx")).root == w("x"));
  CHECK(primitive_root(w("xxxxxx")).exponent == 6);
  CHECK(primitive_root(w("xyxy")).root == w("xy"));
  CHECK(primitive_root(w("xyxy")).exponent == 2);
  CHECK(primitive_root(w("xxxxxy")).exponent == 1);
  CHECK_THROWS_AS(primitive_root(w("-")), DegenerateInput);

  // Oracle: smallest period p dividing n with w = (w[0,p))^{n/p}.
  auto g       = testing::rng(5);
  auto letters = testing::signed_letters({"x"});
  letters.push_back(Letter::of("y"));
  for (int i = 0; i < 300; ++i) {
    Word base = testing::random_word(g, letters, testing::pick(g, 1, 4));
    Word a    = power(base, static_cast<long>(testing::pick(g, 1, 4)));
    std::size_t p = 1;
    while (a.size() % p != 0 || power(a.prefix(p), static_cast<long>(a.size() / p)) != a) {
      ++p;
    }
    CHECK(primitive_root(a).root.size() == p);
  }
}

TEST_CASE("text syntax round trips") {
  for (const char* text : {"-", "x", "X", "xYyx", "x[abba]X[ab]", "v0v1V0", "x12"}) {
    CHECK(Word::parse(text).str() == text);
  }
  CHECK(Word::parse("x[ab]").size() == 1);
  CHECK(Word::parse("X[ab]") == invert(Word::parse("x[ab]")));
  CHECK_THROWS_AS(Word::parse("x["), ParseError);
  CHECK_THROWS_AS(Word::parse("A", Alphabet::monoid), AlphabetViolation);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(w("y"), w("xx")));
  CHECK(shortlex_less(w("x"), w("X")));
  CHECK_FALSE(shortlex_less(w("x"), w("x")));
}
