#pragma once

// Finite relations, monoid actions realizing quasi-orders, and the
// brute-force reduction check used throughout the suites.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cbqo/errors.hpp"

namespace cbqo::qo {

class FiniteRelation {
 public:
  FiniteRelation() = default;
  explicit FiniteRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  // Throws MalformedInput if an index is out of range.
  static FiniteRelation from_pairs(std::size_t                                         n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static FiniteRelation identity(std::size_t n);
  static FiniteRelation full(std::size_t n);

  std::size_t size() const noexcept {
    return n_;
  }
  bool holds(std::size_t i, std::size_t j) const {
    return bits_[i * n_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    bits_[i * n_ + j] = value ? 1 : 0;
  }
  // Pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  FiniteRelation                                   transpose() const;

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  std::size_t               n_ = 0;
  std::vector<std::uint8_t> bits_;
};

bool is_reflexive(const FiniteRelation& r);
bool is_transitive(const FiniteRelation& r);
bool is_quasi_order(const FiniteRelation& r);
bool is_symmetric(const FiniteRelation& r);
bool is_antisymmetric(const FiniteRelation& r);
bool is_equivalence(const FiniteRelation& r);
// Total antisymmetric quasi-order.
bool is_linear_order(const FiniteRelation& r);

// E_Q = Q ∩ Q⁻¹. Throws PreconditionError unless Q is a quasi-order.
FiniteRelation symmetrize_EQ(const FiniteRelation& q);

using Table = std::vector<std::uint32_t>;

class FiniteMonoidAction {
 public:
  FiniteMonoidAction() : FiniteMonoidAction(0, {}) {}
  // Validates every table, drops duplicates and places the identity table
  // at index 0 (adding it if absent).
  FiniteMonoidAction(std::size_t n, std::vector<Table> generators);

  std::size_t size() const noexcept {
    return n_;
  }
  const std::vector<Table>& generators() const noexcept {
    return generators_;
  }
  std::size_t num_generators() const noexcept {
    return generators_.size();
  }
  // Image of `point` under generator `g`; throws PreconditionError if g is
  // out of range.
  std::uint32_t apply(std::size_t g, std::uint32_t point) const;

 private:
  std::size_t        n_;
  std::vector<Table> generators_;
};

Table identity_table(std::size_t n);
// (f ∘ g)(y) = f(g(y)).
Table compose(const Table& f, const Table& g);

// Generator k (k >= 1) sends y to the k-th element, in ascending index order,
// of {x : x Q y}, and fixes y when that set is smaller than k.
FiniteMonoidAction fm_decompose(const FiniteRelation& q);

// All tables of the monoid generated by the action, identity first, in
// discovery order. Throws BoundExceeded past `max_tables`.
std::vector<Table> monoid_closure(const FiniteMonoidAction& a,
                                  std::size_t               max_tables = 1U << 20);

// x ≼ y iff m(y) = x for some m in the generated monoid.
FiniteRelation orbit_qo(const FiniteMonoidAction& a);

// Indicator of s·x where s is a word over generator indices whose rightmost
// letter acts first.
std::vector<std::uint8_t> shift_embed(const FiniteMonoidAction&       a,
                                      std::uint32_t                   x,
                                      const std::vector<std::size_t>& s);

// E(≤) = E ∩ ≤ for an equivalence relation E and a linear order ≤.
FiniteRelation meet_with_order(const FiniteRelation& e, const FiniteRelation& ord);
// Points of r2 are relabelled as r1.size() + i.
FiniteRelation disjoint_union(const FiniteRelation& r1, const FiniteRelation& r2);

struct ReductionCheck {
  bool                                               holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};
// Checks x Q y ⟺ f(x) Q′ f(y) over all pairs, reporting the first failure in
// row-major order.
ReductionCheck verify_reduction(const std::vector<std::size_t>& f,
                                const FiniteRelation&           q,
                                const FiniteRelation&           q_prime);

}  // namespace cbqo::qo
