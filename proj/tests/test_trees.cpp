#include <doctest.h>

#include "cbqo/monoid_shift.hpp"
#include "cbqo/trees.hpp"
#include "support.hpp"

using namespace cbqo;
using namespace cbqo::trees;

namespace {

NodeSet random_nodes(std::mt19937_64& g, const std::string& alphabet, std::size_t depth) {
  NodeSet out{""};
  for (const auto& s : testing::all_strings(alphabet, depth)) {
    if (!s.empty() && out.count(s.substr(0, s.size() - 1)) != 0 && testing::pick(g, 0, 1) == 0) {
      out.insert(s);
    }
  }
  return out;
}

NodeSet naive_subtree(const NodeSet& t, const std::string& u) {
  NodeSet out;
  for (const auto& s : t) {
    if (s.compare(0, u.size(), u) == 0 && s.size() >= u.size()) {
      out.insert(s.substr(u.size()));
    }
  }
  return out;
}

NodeSet random_binary_set(std::mt19937_64& g) {
  auto    pool = testing::all_strings("01", 3);
  NodeSet out;
  for (std::size_t n = testing::pick(g, 1, 4); out.size() < n;) {
    out.insert(pool[testing::pick(g, 0, pool.size() - 1)]);
  }
  return out;
}

std::set<Word> as_m2(const NodeSet& a) {
  std::set<Word> out;
  for (const auto& s : a) {
    out.insert(unhat(s));
  }
  return out;
}

}  // namespace

TEST_CASE("finite trees") {
  FiniteTree t("01", {"", "0", "1", "00"});
  CHECK(subtree(t, "0")->nodes() == NodeSet{"", "0"});
  CHECK(subtree(t, "")->nodes() == t.nodes());
  CHECK_FALSE(subtree(FiniteTree("01", {""}), "0").has_value());
  CHECK(t.depth() == 2);
  CHECK_THROWS_AS(FiniteTree("01", {"", "01"}), MalformedInput);
  CHECK_THROWS_AS(FiniteTree("01", {"", "2"}), MalformedInput);
  CHECK(missing_prefix({"", "01"}) == "0");
  CHECK(missing_prefix(NodeSet{}) == std::nullopt);
}

TEST_CASE("tree quasi-order") {
  FiniteTree t("01", {"", "0", "1", "00"});
  CHECK(tree_leq(t, t) == "");
  CHECK(tree_leq(FiniteTree("01", {""}), FiniteTree("01", {"", "0"})) == "0");
  CHECK_FALSE(tree_leq(FiniteTree("01", {"", "0"}), FiniteTree("01", {"", "1"})).has_value());

  auto g = testing::rng(40);
  for (int i = 0; i < 300; ++i) {
    NodeSet a = random_nodes(g, "01", 2), b = random_nodes(g, "01", 3);
    bool    want = false;
    for (const auto& u : b) {
      want = want || naive_subtree(b, u) == a;
    }
    auto got = tree_leq(FiniteTree("01", a), FiniteTree("01", b));
    CHECK(got.has_value() == want);
    if (got) {
      CHECK(naive_subtree(b, *got) == a);
    }
  }
}

TEST_CASE("marked binary trees") {
  CHECK(encode_t({""}).marks == NodeSet{""});
  CHECK(encode_t({"01"}).marks == NodeSet{"01"});
  CHECK(mbt_truncate(encode_t({""}), 1).nodes() == NodeSet{"", "0", "1", "2"});
  MarkedBinaryTree m{{"01"}};
  CHECK(mbt_subtree(m, "") == m);
  CHECK(mbt_subtree(m, "0").marks == NodeSet{"1"});
  CHECK(mbt_leq(m, m) == "");
  CHECK(mbt_leq(MarkedBinaryTree{{""}}, MarkedBinaryTree{{"0"}}) == "0");
  CHECK_THROWS_AS(encode_t({}), DegenerateInput);

  auto g = testing::rng(41);
  for (int i = 0; i < 200; ++i) {
    MarkedBinaryTree mt{random_binary_set(g)};
    auto             pool = testing::all_strings("01", 2);
    std::string      u    = pool[testing::pick(g, 0, pool.size() - 1)];
    std::size_t      d    = testing::pick(g, 0, 3);
    auto             lhs  = mbt_truncate(mbt_subtree(mt, u), d).nodes();
    auto             rhs  = naive_subtree(mbt_truncate(mt, d + u.size()).nodes(), u);
    NodeSet          cut;
    for (const auto& s : rhs) {
      if (s.size() <= d) {
        cut.insert(s);
      }
    }
    CHECK(lhs == cut);
  }
}

TEST_CASE("marked-tree order agrees with the prefix order") {
  auto g = testing::rng(42);
  for (int i = 0; i < 500; ++i) {
    NodeSet a = random_binary_set(g), b = random_binary_set(g);
    if (i % 2 == 0) {
      // A derived positive: A = {v : u v ∈ B} for a prefix u of some element.
      std::vector<std::string> bs(b.begin(), b.end());
      const auto&              y = bs[testing::pick(g, 0, bs.size() - 1)];
      std::string              u = y.substr(0, testing::pick(g, 0, y.size()));
      a                          = naive_subtree(b, u);
    }
    auto got = mbt_leq(encode_t(a), encode_t(b));
    CHECK(got.has_value() == shift::prefix_qo_leq(as_m2(a), as_m2(b)).has_value());
    if (got) {
      CHECK(mbt_subtree(encode_t(b), *got) == encode_t(a));
    }
    CHECK(c_stage_leq(a, b).has_value() == got.has_value());
  }
}

TEST_CASE("the code c and the map C") {
  CHECK(code_c("2") == "10");
  CHECK(code_c("") == "");
  CHECK(code_c("02") == "0010");
  CHECK(decode_c_preimage("0010") == "02");
  CHECK_FALSE(decode_c_preimage("11").has_value());
  CHECK_FALSE(decode_c_preimage("0").has_value());
  CHECK(encode_C(FiniteTree("012", {""})).nodes() == NodeSet{""});
  CHECK(encode_C(FiniteTree("012", {"", "0"})).nodes() == NodeSet{"", "0", "00"});
  CHECK(encode_C(FiniteTree("012", {"", "2"})).nodes() == NodeSet{"", "1", "10"});
  for (const auto& s : testing::all_strings("012", 4)) {
    CHECK(decode_c_preimage(code_c(s)) == s);
  }
}

TEST_CASE("shortlex enumeration of strings") {
  auto s = strings_up_to("01", 2);
  CHECK(s == std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});
  CHECK(strings_up_to("ab", 3).size() == 15);
}

TEST_CASE("hat and unhat are inverse") {
  for (const auto& s : testing::all_strings("01", 5)) {
    CHECK(hat(unhat(s)) == s);
  }
}
