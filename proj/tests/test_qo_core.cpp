#include <doctest.h>

#include <deque>

#include "cbqo/qo_core.hpp"
#include "support.hpp"

using namespace cbqo;
using namespace cbqo::qo;

namespace {

std::vector<FiniteRelation> all_quasi_orders(std::size_t n) {
  std::vector<FiniteRelation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n * n)); ++mask) {
    FiniteRelation r(n);
    for (std::size_t k = 0; k < n * n; ++k) {
      r.set(k / n, k % n, (mask >> k & 1U) != 0);
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = r.holds(a, a);
      for (std::size_t b = 0; b < n && ok; ++b) {
        for (std::size_t c = 0; c < n && ok; ++c) {
          ok = !(r.holds(a, b) && r.holds(b, c)) || r.holds(a, c);
        }
      }
    }
    if (ok) {
      out.push_back(r);
    }
  }
  return out;
}

FiniteRelation random_quasi_order(std::mt19937_64& g, std::size_t n) {
  FiniteRelation r = FiniteRelation::identity(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (testing::pick(g, 0, 3) == 0) {
        r.set(a, b);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (r.holds(a, k) && r.holds(k, b)) {
          r.set(a, b);
        }
      }
    }
  }
  return r;
}

FiniteMonoidAction random_action(std::mt19937_64& g, std::size_t n, std::size_t gens) {
  std::vector<Table> tables;
  for (std::size_t k = 0; k < gens; ++k) {
    Table t(n);
    for (auto& v : t) {
      v = static_cast<std::uint32_t>(testing::pick(g, 0, n - 1));
    }
    tables.push_back(t);
  }
  return FiniteMonoidAction(n, tables);
}

// x ≼ y iff x is reachable from y along generator edges.
FiniteRelation reachability(const FiniteMonoidAction& a) {
  FiniteRelation r(a.size());
  for (std::uint32_t y = 0; y < a.size(); ++y) {
    std::deque<std::uint32_t> queue{y};
    r.set(y, y);
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      for (const auto& t : a.generators()) {
        if (!r.holds(t[p], y)) {
          r.set(t[p], y);
          queue.push_back(t[p]);
        }
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("quasi-order predicates") {
  CHECK(is_quasi_order(FiniteRelation::identity(4)));
  CHECK_FALSE(is_quasi_order(FiniteRelation::from_pairs(2, {{0, 1}})));
  auto r = FiniteRelation::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  CHECK_FALSE(is_quasi_order(r));
  CHECK(is_linear_order(FiniteRelation::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}})));
  CHECK(is_equivalence(FiniteRelation::full(3)));
  CHECK_THROWS_AS(FiniteRelation::from_pairs(2, {{0, 2}}), MalformedInput);
}

TEST_CASE("symmetrization") {
  auto chain = FiniteRelation::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(symmetrize_EQ(chain) == FiniteRelation::identity(2));
  CHECK(symmetrize_EQ(FiniteRelation::full(3)) == FiniteRelation::full(3));
  auto g = testing::rng(20);
  for (int i = 0; i < 100; ++i) {
    auto           q = random_quasi_order(g, 5);
    FiniteRelation want(5);
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = 0; b < 5; ++b) {
        want.set(a, b, q.holds(a, b) && q.holds(b, a));
      }
    }
    CHECK(symmetrize_EQ(q) == want);
  }
  CHECK_THROWS_AS(symmetrize_EQ(FiniteRelation::from_pairs(2, {{0, 1}})), PreconditionError);
}

TEST_CASE("decomposition examples") {
  CHECK(fm_decompose(FiniteRelation::identity(3)).num_generators() == 1);
  auto a = fm_decompose(FiniteRelation::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}));
  REQUIRE(a.num_generators() == 2);
  CHECK(a.generators()[0] == identity_table(2));
  CHECK(a.generators()[1] == Table{0, 0});
}

TEST_CASE("quasi-orders on at most three points round-trip") {
  std::vector<std::size_t> counts;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto all = all_quasi_orders(n);
    counts.push_back(all.size());
    for (const auto& q : all) {
      CHECK(is_quasi_order(q));
      CHECK(orbit_qo(fm_decompose(q)) == q);
    }
  }
  CHECK(counts == std::vector<std::size_t>{1, 1, 4, 29});
}

TEST_CASE("orbit quasi-order") {
  CHECK(orbit_qo(FiniteMonoidAction(3, {})) == FiniteRelation::identity(3));
  CHECK(orbit_qo(FiniteMonoidAction(2, {{0, 0}})) == FiniteRelation::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}));
  auto g = testing::rng(21);
  for (int i = 0; i < 200; ++i) {
    auto a = random_action(g, testing::pick(g, 1, 6), testing::pick(g, 0, 3));
    CHECK(orbit_qo(a) == reachability(a));
  }
  for (int i = 0; i < 200; ++i) {
    auto q = random_quasi_order(g, 5);
    CHECK(orbit_qo(fm_decompose(q)) == q);
    std::vector<std::size_t> id{0, 1, 2, 3, 4};
    CHECK(verify_reduction(id, q, orbit_qo(fm_decompose(q))).holds);
  }
}

TEST_CASE("monoid closure contains every composite") {
  auto g = testing::rng(22);
  for (int i = 0; i < 50; ++i) {
    auto a      = random_action(g, 4, 2);
    auto tables = monoid_closure(a);
    std::set<Table> set(tables.begin(), tables.end());
    CHECK(tables.front() == identity_table(4));
    for (const auto& f : tables) {
      for (const auto& t : a.generators()) {
        CHECK(set.count(compose(t, f)) == 1);
      }
    }
  }
}

TEST_CASE("shift embedding") {
  auto g = testing::rng(23);
  for (int i = 0; i < 50; ++i) {
    auto a = random_action(g, 4, 3);
    for (std::uint32_t x = 0; x < 4; ++x) {
      auto ind = shift_embed(a, x, {});
      for (std::uint32_t y = 0; y < 4; ++y) {
        CHECK(ind[y] == (x == y ? 1 : 0));
        if (y != x) {
          CHECK(shift_embed(a, y, {}) != ind);
        }
      }
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> s(testing::pick(g, 0, 4));
        for (auto& k : s) {
          k = testing::pick(g, 0, a.num_generators() - 1);
        }
        std::size_t t  = testing::pick(g, 0, a.num_generators() - 1);
        auto        st = s;
        st.push_back(t);
        CHECK(shift_embed(a, a.apply(t, x), s) == shift_embed(a, x, st));
        // Direct evaluation, rightmost letter first.
        std::uint32_t p = x;
        for (auto it = st.rbegin(); it != st.rend(); ++it) {
          p = a.generators()[*it][p];
        }
        auto direct = shift_embed(a, x, st);
        CHECK(direct[p] == 1);
        CHECK(std::count(direct.begin(), direct.end(), 1) == 1);
      }
    }
  }
}

TEST_CASE("order combinators") {
  auto ord = FiniteRelation::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(meet_with_order(FiniteRelation::identity(2), ord) == FiniteRelation::identity(2));
  CHECK(meet_with_order(FiniteRelation::full(2), ord) == ord);
  auto u = disjoint_union(ord, FiniteRelation::full(2));
  CHECK(u.size() == 4);
  CHECK(u.holds(2, 3));
  CHECK(u.holds(3, 2));
  CHECK_FALSE(u.holds(1, 2));
  CHECK(u.holds(0, 1));
}

TEST_CASE("reduction check") {
  auto q = FiniteRelation::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(verify_reduction({0, 1}, q, q).holds);
  auto res = verify_reduction({0, 0}, q, FiniteRelation::identity(1));
  CHECK_FALSE(res.holds);
  REQUIRE(res.counterexample.has_value());
  CHECK(*res.counterexample == std::pair<std::size_t, std::size_t>{1, 0});
}
