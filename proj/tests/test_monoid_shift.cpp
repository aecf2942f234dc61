#include <doctest.h>

#include "cbqo/monoid_shift.hpp"
#include "support.hpp"

using namespace cbqo;
using namespace cbqo::shift;

namespace {

// Whether s is a concatenation of blocks a bⁿ with n ≥ 1.
bool in_image(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'a' || i + 1 >= s.size() || s[i + 1] != 'b') {
      return false;
    }
    ++i;
    while (i < s.size() && s[i] == 'b') {
      ++i;
    }
  }
  return true;
}

std::string text(const Word& w) {
  return w.empty() ? "" : w.str();
}

// Length of the head left after removing the longest suffix in the image.
std::size_t naive_L(const std::string& s) {
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (in_image(s.substr(k))) {
      return k;
    }
  }
  return s.size();
}

Word random_m2(std::mt19937_64& g, std::size_t max_len) {
  std::string s;
  for (std::size_t n = testing::pick(g, 0, max_len); n > 0; --n) {
    s += testing::pick(g, 0, 1) == 0 ? 'a' : 'b';
  }
  return m2_word(s.empty() ? "-" : s);
}

std::set<Word> random_m2_set(std::mt19937_64& g, std::size_t max_size, std::size_t max_len) {
  std::set<Word> out;
  for (std::size_t n = testing::pick(g, 1, max_size); out.size() < n;) {
    out.insert(random_m2(g, max_len));
  }
  return out;
}

// Existence of m with A m = B ∩ M₂m, over every m up to the longest element of B.
bool naive_suffix_leq(const std::set<Word>& a, const std::set<Word>& b) {
  std::size_t longest = 0;
  for (const auto& y : b) {
    longest = std::max(longest, y.size());
  }
  for (const auto& ms : testing::all_strings("ab", longest)) {
    Word           m = m2_word(ms.empty() ? "-" : ms);
    std::set<Word> am, bm;
    for (const auto& x : a) {
      am.insert(concat(x, m));
    }
    for (const auto& y : b) {
      if (y.size() >= m.size() && y.suffix_from(y.size() - m.size()) == m) {
        bm.insert(y);
      }
    }
    if (am == bm) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("embedding of M_omega") {
  CHECK(text(embed_momega(momega_word("x3"))) == "abbb");
  CHECK(embed_momega(momega_word("-")).empty());
  CHECK(text(embed_momega(momega_word("x1x2"))) == "ababb");
  CHECK(decode_momega(m2_word("ababb")) == momega_word("x1x2"));
  CHECK_FALSE(decode_momega(m2_word("ba")).has_value());
}

TEST_CASE("canonical split and its length") {
  CHECK(canonical_split(m2_word("abb")).head.empty());
  CHECK(text(canonical_split(m2_word("abb")).tail) == "abb");
  CHECK(text(canonical_split(m2_word("b")).head) == "b");
  CHECK(canonical_split(m2_word("b")).tail.empty());
  CHECK(text(canonical_split(m2_word("babb")).head) == "b");
  CHECK(text(canonical_split(m2_word("babb")).tail) == "abb");
  CHECK(L_len(m2_word("abbb")) == 0);
  CHECK(L_len(m2_word("b")) == 1);

  for (const auto& s : testing::all_strings("ab", 9)) {
    Word h = m2_word(s.empty() ? "-" : s);
    CHECK(L_len(h) == naive_L(s));
    auto sp = canonical_split(h);
    CHECK(concat(sp.head, sp.tail) == h);
  }
  auto g = testing::rng(30);
  for (int i = 0; i < 200; ++i) {
    Word h = random_m2(g, 8);
    Word gw;
    for (std::size_t n = testing::pick(g, 0, 3); n > 0; --n) {
      gw = concat(gw, momega_generator(testing::pick(g, 1, 4)));
    }
    CHECK(L_len(concat(h, embed_momega(gw))) == L_len(h));
  }
}

TEST_CASE("star map") {
  Bitmap p{momega_word("x1")};
  CHECK(star_eval(p, m2_word("ab")));
  CHECK(star_eval(p, m2_word("b")));
  CHECK_FALSE(star_eval(p, m2_word("bb")));
  CHECK(star_eval(Bitmap{}, m2_word("b")));
  CHECK_FALSE(star_eval(p, m2_word("abb")));
}

TEST_CASE("shift action") {
  Evaluator q = [](const Word& h) { return h.size() == 2; };
  CHECK(shift_act_eval(Word(), q, m2_word("ab")));
  Bitmap    one{momega_word("x1")};
  Evaluator q_star = [&](const Word& h) { return star_eval(one, h); };
  CHECK_FALSE(shift_act_eval(embed_momega(momega_word("x2")), q_star, Word()));
  CHECK(shift_act_eval(embed_momega(momega_word("x1")), q_star, Word()));
}

TEST_CASE("suffix and prefix quasi-orders") {
  std::set<Word> a{m2_word("-")}, b{m2_word("a")};
  CHECK(suffix_qo_leq(b, b) == Word());
  CHECK(prefix_qo_leq(b, b) == Word());
  CHECK(suffix_qo_leq(a, b) == m2_word("a"));
  CHECK(prefix_qo_leq(a, b) == m2_word("a"));
  CHECK_FALSE(suffix_qo_leq(std::set<Word>{m2_word("a")}, std::set<Word>{m2_word("b")}).has_value());
  CHECK_THROWS_AS(suffix_qo_leq({}, b), DegenerateInput);

  auto g = testing::rng(31);
  for (int i = 0; i < 500; ++i) {
    auto x  = random_m2_set(g, 3, 3);
    auto y  = random_m2_set(g, 4, 4);
    auto m  = suffix_qo_leq(x, y);
    CHECK(m.has_value() == naive_suffix_leq(x, y));
    if (m) {
      CHECK(suffix_witness_holds(x, y, *m));
    }
    auto mp = prefix_qo_leq(bar_set(x), bar_set(y));
    CHECK(mp.has_value() == m.has_value());
    if (mp) {
      CHECK(prefix_witness_holds(bar_set(x), bar_set(y), *mp));
    }
  }
}

TEST_CASE("bar map") {
  CHECK(bar_map(Word()).empty());
  CHECK(text(bar_map(m2_word("aabbba"))) == "abbbaa");
  auto g = testing::rng(32);
  for (int i = 0; i < 500; ++i) {
    Word x = random_m2(g, 10);
    CHECK(bar_map(bar_map(x)) == x);
    CHECK(bar_map(x).size() == x.size());
  }
}
