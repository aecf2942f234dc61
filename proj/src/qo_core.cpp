#include "cbqo/qo_core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace cbqo::qo {

FiniteRelation FiniteRelation::from_pairs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  FiniteRelation r(n);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw MalformedInput("relation pair (" + std::to_string(i) + ", " + std::to_string(j)
                           + ") out of range for size " + std::to_string(n));
    }
    r.set(i, j);
  }
  return r;
}

FiniteRelation FiniteRelation::identity(std::size_t n) {
  FiniteRelation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.set(i, i);
  }
  return r;
}

FiniteRelation FiniteRelation::full(std::size_t n) {
  FiniteRelation r(n);
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (holds(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

FiniteRelation FiniteRelation::transpose() const {
  FiniteRelation t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      t.set(j, i, holds(i, j));
    }
  }
  return t;
}

bool is_reflexive(const FiniteRelation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r.holds(i, i)) {
      return false;
    }
  }
  return true;
}

bool is_transitive(const FiniteRelation& r) {
  std::size_t const n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.holds(i, j)) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (r.holds(j, k) && !r.holds(i, k)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_quasi_order(const FiniteRelation& r) {
  return is_reflexive(r) && is_transitive(r);
}

bool is_symmetric(const FiniteRelation& r) {
  return r == r.transpose();
}

bool is_antisymmetric(const FiniteRelation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r.holds(i, j) && r.holds(j, i)) {
        return false;
      }
    }
  }
  return true;
}

bool is_equivalence(const FiniteRelation& r) {
  return is_quasi_order(r) && is_symmetric(r);
}

bool is_linear_order(const FiniteRelation& r) {
  if (!is_quasi_order(r) || !is_antisymmetric(r)) {
    return false;
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!r.holds(i, j) && !r.holds(j, i)) {
        return false;
      }
    }
  }
  return true;
}

FiniteRelation symmetrize_EQ(const FiniteRelation& q) {
  if (!is_quasi_order(q)) {
    throw PreconditionError("symmetrize_EQ expects a quasi-order");
  }
  FiniteRelation e(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      e.set(i, j, q.holds(i, j) && q.holds(j, i));
    }
  }
  return e;
}

Table identity_table(std::size_t n) {
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint32_t>(i);
  }
  return t;
}

Table compose(const Table& f, const Table& g) {
  Table out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = f[g[i]];
  }
  return out;
}

FiniteMonoidAction::FiniteMonoidAction(std::size_t n, std::vector<Table> generators)
    : n_(n) {
  Table const id = identity_table(n);
  generators_.push_back(id);
  std::set<Table> seen{id};
  for (auto& t : generators) {
    if (t.size() != n) {
      throw MalformedInput("generator table has " + std::to_string(t.size())
                           + " entries, expected " + std::to_string(n));
    }
    for (auto v : t) {
      if (v >= n) {
        throw MalformedInput("generator table value " + std::to_string(v)
                             + " out of range for size " + std::to_string(n));
      }
    }
    if (seen.insert(t).second) {
      generators_.push_back(std::move(t));
    }
  }
}

std::uint32_t FiniteMonoidAction::apply(std::size_t g, std::uint32_t point) const {
  if (g >= generators_.size()) {
    throw PreconditionError("generator index " + std::to_string(g) + " out of range");
  }
  if (point >= n_) {
    throw PreconditionError("point " + std::to_string(point) + " out of range");
  }
  return generators_[g][point];
}

FiniteMonoidAction fm_decompose(const FiniteRelation& q) {
  if (!is_quasi_order(q)) {
    throw PreconditionError("fm_decompose expects a quasi-order");
  }
  std::size_t const                     n = q.size();
  std::vector<std::vector<std::size_t>> preds(n);
  std::size_t                           widest = 0;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (q.holds(x, y)) {
        preds[y].push_back(x);
      }
    }
    widest = std::max(widest, preds[y].size());
  }
  std::vector<Table> gens;
  for (std::size_t k = 0; k < widest; ++k) {
    Table t(n);
    for (std::size_t y = 0; y < n; ++y) {
      t[y] = static_cast<std::uint32_t>(k < preds[y].size() ? preds[y][k] : y);
    }
    gens.push_back(std::move(t));
  }
  return FiniteMonoidAction(n, std::move(gens));
}

std::vector<Table> monoid_closure(const FiniteMonoidAction& a, std::size_t max_tables) {
  std::vector<Table> found{identity_table(a.size())};
  std::set<Table>    seen{found.front()};
  std::deque<std::size_t> work{0};
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    for (const auto& g : a.generators()) {
      Table t = compose(g, found[i]);
      if (seen.insert(t).second) {
        if (found.size() >= max_tables) {
          throw BoundExceeded("monoid closure exceeds " + std::to_string(max_tables)
                              + " tables");
        }
        found.push_back(std::move(t));
        work.push_back(found.size() - 1);
      }
    }
  }
  return found;
}

FiniteRelation orbit_qo(const FiniteMonoidAction& a) {
  FiniteRelation r(a.size());
  for (const auto& m : monoid_closure(a)) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      r.set(m[y], y);
    }
  }
  return r;
}

std::vector<std::uint8_t> shift_embed(const FiniteMonoidAction&       a,
                                      std::uint32_t                   x,
                                      const std::vector<std::size_t>& s) {
  std::uint32_t point = x;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    point = a.apply(*it, point);
  }
  if (point >= a.size()) {
    throw PreconditionError("point " + std::to_string(x) + " out of range");
  }
  std::vector<std::uint8_t> bits(a.size(), 0);
  bits[point] = 1;
  return bits;
}

FiniteRelation meet_with_order(const FiniteRelation& e, const FiniteRelation& ord) {
  if (e.size() != ord.size()) {
    throw PreconditionError("meet_with_order: relations on different point sets");
  }
  if (!is_equivalence(e)) {
    throw PreconditionError("meet_with_order: first argument is not an equivalence relation");
  }
  if (!is_linear_order(ord)) {
    throw PreconditionError("meet_with_order: second argument is not a linear order");
  }
  FiniteRelation out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      out.set(i, j, e.holds(i, j) && ord.holds(i, j));
    }
  }
  return out;
}

FiniteRelation disjoint_union(const FiniteRelation& r1, const FiniteRelation& r2) {
  std::size_t const n1 = r1.size();
  FiniteRelation    out(n1 + r2.size());
  for (auto [i, j] : r1.pairs()) {
    out.set(i, j);
  }
  for (auto [i, j] : r2.pairs()) {
    out.set(n1 + i, n1 + j);
  }
  return out;
}

ReductionCheck verify_reduction(const std::vector<std::size_t>& f,
                                const FiniteRelation&           q,
                                const FiniteRelation&           q_prime) {
  if (f.size() != q.size()) {
    throw PreconditionError("verify_reduction: map is not total on the source points");
  }
  for (auto v : f) {
    if (v >= q_prime.size()) {
      throw PreconditionError("verify_reduction: map value out of range");
    }
  }
  for (std::size_t x = 0; x < q.size(); ++x) {
    for (std::size_t y = 0; y < q.size(); ++y) {
      if (q.holds(x, y) != q_prime.holds(f[x], f[y])) {
        return {false, std::pair{x, y}};
      }
    }
  }
  return {};
}

}  // namespace cbqo::qo
