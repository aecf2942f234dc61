#include <doctest.h>

#include "cbqo/subset_qo.hpp"
#include "support.hpp"

using namespace cbqo;
using namespace cbqo::subset;
using testing::w;

namespace {

WordSet ws(std::initializer_list<const char*> items) {
  WordSet out;
  for (const char* s : items) {
    out.insert(Word::parse(s));
  }
  return out;
}

WordSet random_set(std::mt19937_64& g, std::size_t max_size, std::size_t max_len) {
  auto    letters = testing::signed_letters({"a", "b"});
  WordSet out;
  for (std::size_t n = testing::pick(g, 1, max_size); out.size() < n;) {
    out.insert(testing::random_reduced(g, letters, testing::pick(g, 0, max_len)));
  }
  return out;
}

std::vector<Word> ball(std::size_t radius) {
  auto              letters = testing::signed_letters({"a", "b"});
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() < radius) {
      for (Letter l : letters) {
        if (out[i].empty() || out[i].back() != l.inverse()) {
          out.push_back(concat(out[i], Word::letter(l)));
        }
      }
    }
  }
  return out;
}

// A equals the intersection of all translates gB containing it.
bool naive_translate_leq(const WordSet& a, const WordSet& b, const std::vector<Word>& gs) {
  std::optional<WordSet> meet;
  for (const auto& g : gs) {
    WordSet gb;
    for (const auto& y : b) {
      gb.insert(free_reduce(concat(g, y)));
    }
    if (!std::includes(gb.begin(), gb.end(), a.begin(), a.end())) {
      continue;
    }
    if (!meet) {
      meet = gb;
    } else {
      WordSet next;
      std::set_intersection(meet->begin(), meet->end(), gb.begin(), gb.end(),
                            std::inserter(next, next.end()));
      meet = next;
    }
  }
  return meet && *meet == a;
}

FPWord random_fp(std::mt19937_64& g, const FreeProduct& fp) {
  auto   letters = testing::signed_letters({"a", "b"});
  FPWord raw;
  for (std::size_t n = testing::pick(g, 0, 4); n > 0; --n) {
    if (testing::pick(g, 0, 1) == 0) {
      raw.emplace_back(testing::random_reduced(g, letters, testing::pick(g, 1, 2)));
    } else {
      raw.emplace_back(static_cast<long>(testing::pick(g, 1, 4)) * (testing::pick(g, 0, 1) ? 1 : -1));
    }
  }
  return fp.normalize(raw);
}

}  // namespace

TEST_CASE("translate quasi-order examples") {
  auto a = ws({"-", "a"});
  CHECK(translate_qo_leq(a, a) == std::vector<Word>{Word()});
  CHECK(translate_qo_leq(ws({"-"}), ws({"-", "a"})) == std::vector<Word>{Word(), w("A")});
  CHECK(translate_qo_leq(ws({"a"}), ws({"-"})) == std::vector<Word>{w("a")});
  CHECK_THROWS_AS(translate_qo_leq({}, a), DegenerateInput);
}

TEST_CASE("translate quasi-order against a bounded search") {
  auto g      = testing::rng(50);
  auto radius = ball(4);
  for (int i = 0; i < 300; ++i) {
    WordSet a = random_set(g, 3, 2), b = random_set(g, 3, 2);
    auto    got = translate_qo_leq(a, b);
    CHECK(got.has_value() == naive_translate_leq(a, b, radius));
    if (got) {
      CHECK(translate_witness_holds(a, b, *got));
    }
  }
}

TEST_CASE("outline tree") {
  auto e = t_edges(trees::FiniteTree("ab", {""}));
  CHECK(e.t_a == trees::NodeSet{""});
  CHECK(e.t_b == trees::NodeSet{""});
  auto e1 = t_edges(trees::FiniteTree("ab", {"", "a"}));
  CHECK(e1.t_a == trees::NodeSet{"a"});
  CHECK(e1.t_b == trees::NodeSet{"", "a"});
  auto e2 = t_edges(trees::FiniteTree("ab", {"", "a", "aa"}));
  CHECK(e2.t_a == trees::NodeSet{"aa"});
  CHECK(e2.t_b == trees::NodeSet{"", "a", "aa"});
  CHECK(outline_S(trees::FiniteTree("ab", {""})).nodes() == trees::NodeSet{"", "c", "d"});
  CHECK(outline_S(trees::FiniteTree("ab", {"", "a"})).nodes()
        == trees::NodeSet{"", "a", "ac", "d", "ad"});
}

TEST_CASE("the map f") {
  const auto& f = default_fmap();
  CHECK(*f("") == ws({"-"}));
  CHECK(*f("a") == ws({"a", "x[a]a"}));
  auto fab = *f("ab");
  CHECK(fab == ws({"ab", "ax[b]b", "x[a]ab", "x[a]ax[b]b", "x[ab]ab"}));
  CHECK(G_map(trees::FiniteTree("ab", {""})) == ws({"-", "c", "x[c]c", "d", "x[d]d"}));
  CHECK_THROWS_AS(FMap(2)("abc"), BoundExceeded);

  auto strings = testing::all_strings("abcd", 3);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (const auto& x : *f(strings[i])) {
      CHECK(phi_project(x) == strings[i]);
    }
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      const auto& fi = *f(strings[i]);
      const auto& fj = *f(strings[j]);
      WordSet      meet;
      std::set_intersection(fi.begin(), fi.end(), fj.begin(), fj.end(),
                            std::inserter(meet, meet.end()));
      CHECK(meet.empty());
    }
  }
  for (const auto& s : testing::all_strings("abcd", 4)) {
    if (s.size() == 4) {
      for (const auto& x : *f(s)) {
        CHECK(phi_project(x) == s);
      }
    }
  }
  CHECK(phi_project(w("x[a]ax[b]b")) == "ab");
  CHECK(phi_project(Word()) == "");
}

TEST_CASE("translation identity for G") {
  trees::FiniteTree t("ab", {"", "a"});
  auto              r = itsahom_verify(t, "a");
  CHECK(r.equal);
  CHECK(r.rhs == translate(w("a"), G_map(trees::FiniteTree("ab", {""}))));
  CHECK_THROWS_AS(itsahom_verify(t, ""), PreconditionError);
  CHECK_THROWS_AS(itsahom_verify(t, "b"), PreconditionError);
  auto g = G_map(t);
  CHECK(g.count(Word()) == 1);
}

TEST_CASE("embedding of the free group of countable rank") {
  CHECK(finf_generator_index(Letter::of("a")) == 1);
  CHECK(finf_generator_index(Letter::of("d")) == 4);
  CHECK(finf_generator_index(indexed_generator("a")) == 5);
  CHECK(finf_generator_index(indexed_generator("aa")) == 9);
  CHECK(embed_finf_to_f2(w("a")) == w("abA"));
  CHECK(f2_preimage(w("aabAAabA")) == w("ba"));
  CHECK_FALSE(f2_preimage(w("ab")).has_value());
  for (unsigned long long k = 1; k <= 200; ++k) {
    CHECK(finf_generator_index(finf_generator(k)) == k);
  }
  auto g = testing::rng(51);
  for (int i = 0; i < 100; ++i) {
    WordSet a = random_set(g, 3, 2), b = random_set(g, 3, 2), ea, eb;
    for (const auto& x : a) {
      ea.insert(embed_finf_to_f2(x));
      CHECK(f2_preimage(embed_finf_to_f2(x)) == x);
    }
    for (const auto& y : b) {
      eb.insert(embed_finf_to_f2(y));
    }
    CHECK(translate_qo_leq(a, b).has_value() == translate_qo_leq(ea, eb).has_value());
  }
}

TEST_CASE("free product normal forms") {
  FreeProduct fp7(7), fp0(0);
  auto        ah = fp7.multiply(fp7.group_element(w("a")), fp7.h_power(1));
  CHECK(fp7.multiply(ah, fp7.inverse(ah)).empty());
  CHECK(fp7.h_power(7).empty());
  CHECK_FALSE(fp0.h_power(7).empty());
  CHECK(fp7.h_power(-1) == fp7.h_power(6));
  auto g = testing::rng(52);
  for (int i = 0; i < 500; ++i) {
    for (const FreeProduct* fp : {&fp7, &fp0}) {
      auto x = random_fp(g, *fp), y = random_fp(g, *fp), z = random_fp(g, *fp);
      CHECK(fp->multiply(fp->multiply(x, y), z) == fp->multiply(x, fp->multiply(y, z)));
      CHECK(fp->multiply(x, fp->inverse(x)).empty());
      CHECK(fp->normalize(x) == x);
    }
  }
}

TEST_CASE("K map and membership") {
  FreeProduct fp(7);
  CHECK(K_map(ws({"-"}), fp) == std::vector<FPWord>{fp.h_power(1)});
  CHECK(K_map(ws({"a"}), fp) == std::vector<FPWord>{fp.conjugate(w("a"), fp.h_power(1))});
  auto xh = fp.conjugate(w("a"), fp.h_power(1));
  CHECK(K_member(xh, ws({"a"}), fp));
  auto two = fp.multiply(fp.h_power(1), fp.conjugate(w("b"), fp.h_power(1)));
  CHECK(K_member(two, ws({"-", "b"}), fp));
  CHECK_FALSE(K_member(fp.group_element(w("a")), ws({"a"}), fp));

  // K(gA) generators are the g-conjugates of the K(A) generators.
  auto ka  = K_map(ws({"-", "a"}), fp);
  auto kga = K_map(ws({"b", "ba"}), fp);
  std::set<FPWord> conj;
  for (const auto& k : ka) {
    conj.insert(fp.conjugate(w("b"), k));
  }
  CHECK(std::set<FPWord>(kga.begin(), kga.end()) == conj);
}

TEST_CASE("K membership agrees with literal enumeration") {
  auto                     g = testing::rng(53);
  std::vector<Word> const  letters{w("a"), w("b")};
  for (long order : {7L, 0L}) {
    FreeProduct fp(order);
    for (int i = 0; i < 6; ++i) {
      WordSet a    = random_set(g, 2, 1);
      auto    lits = K_enumerate(a, fp, 3, order == 0 ? 3 : 6);
      for (const auto& x : lits) {
        CHECK(K_member(x, a, fp));
      }
      for (const auto& x : K_universe(a, letters, fp, 4)) {
        if (h_syllable_count(x) > 3) {
          continue;
        }
        bool small = true;
        for (const auto& s : x) {
          if (const long* k = std::get_if<long>(&s)) {
            small = small && std::labs(*k) <= 3;
          }
        }
        if (small || order != 0) {
          CHECK(K_member(x, a, fp) == (lits.count(x) == 1));
        }
      }
    }
  }
}

TEST_CASE("conjugation quasi-order") {
  FreeProduct fp(7);
  auto        same = conj_qo_leq_K(ws({"-", "a"}), ws({"-", "a"}), fp);
  REQUIRE(same.witness.has_value());
  CHECK(*same.witness == std::vector<Word>{Word()});
  CHECK(same.verified);

  auto up = conj_qo_leq_K(ws({"-"}), ws({"-", "a"}), fp);
  REQUIRE(up.witness.has_value());
  CHECK(*up.witness == std::vector<Word>{Word(), w("A")});
  CHECK(up.verified);

  // {a} and {b} are comparable through the translate a b⁻¹.
  auto ab = conj_qo_leq_K(ws({"a"}), ws({"b"}), fp);
  CHECK(ab.witness.has_value());

  auto none = conj_qo_leq_K(ws({"-", "a"}), ws({"-", "b"}), fp);
  CHECK_FALSE(none.witness.has_value());
  REQUIRE(none.separating.has_value());
  CHECK(K_member(*none.separating, ws({"-", "a"}), fp));
}
