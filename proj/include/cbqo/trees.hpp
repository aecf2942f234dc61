#pragma once

// Finite trees as prefix-closed string sets, the tree quasi-order, and the
// two encodings A ↦ T_A (kept symbolic as a mark set) and T ↦ C(T).

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "cbqo/errors.hpp"
#include "cbqo/words.hpp"

namespace cbqo::trees {

using NodeSet = std::set<std::string>;

// The first prefix of some node that is not itself a node, or nullopt when
// the set is prefix-closed (the empty set counts as prefix-closed).
std::optional<std::string> missing_prefix(const NodeSet& nodes);

class FiniteTree {
 public:
  // Throws MalformedInput if a node uses a symbol outside `alphabet`, if the
  // set is empty, or if it is not prefix-closed (naming the missing prefix).
  FiniteTree(std::string alphabet, NodeSet nodes);

  const std::string& alphabet() const noexcept {
    return alphabet_;
  }
  const NodeSet& nodes() const noexcept {
    return nodes_;
  }
  bool contains(std::string_view u) const {
    return nodes_.count(std::string(u)) != 0;
  }
  std::size_t size() const noexcept {
    return nodes_.size();
  }
  std::size_t depth() const;

  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;

 private:
  std::string alphabet_;
  NodeSet     nodes_;
};

// {v : u⌢v ∈ T}, or nullopt when that set is empty.
std::optional<FiniteTree> subtree(const FiniteTree& t, std::string_view u);

// Some u with T = T′_u, searched over the nodes of T′ in shortlex order.
std::optional<std::string> tree_leq(const FiniteTree& t, const FiniteTree& t_prime);

// Variant for truncations: `t` holds the nodes of a tree of length ≤ depth
// and `t_prime` the nodes of another tree of length ≤ depth + max_witness.
// Searches u ∈ T′ with |u| ≤ max_witness and {v : u⌢v ∈ T′, |v| ≤ depth} = T.
std::optional<std::string> tree_leq_truncated(const NodeSet& t,
                                              const NodeSet& t_prime,
                                              std::size_t    depth,
                                              std::size_t    max_witness);

// Symbolic tree: the full binary tree plus the leaves w⌢2 for w ∈ marks.
struct MarkedBinaryTree {
  NodeSet marks;

  friend bool operator==(const MarkedBinaryTree&, const MarkedBinaryTree&) = default;
};

// Binary string of a word over {a, b}: a ↦ 0, b ↦ 1.
std::string hat(const Word& w);
Word        unhat(std::string_view s);

// Throws DegenerateInput when A is empty, MalformedInput on non-binary strings.
MarkedBinaryTree encode_t(const NodeSet& a);
MarkedBinaryTree mbt_subtree(const MarkedBinaryTree& m, std::string_view u);
// Some u with marks(M) = {v : u⌢v ∈ marks(M′)}; candidates are prefixes of
// marks of M′ in shortlex order. The witness is re-checked on truncations of
// the symbolic trees before being returned. Throws DegenerateInput on empty
// mark sets.
std::optional<std::string> mbt_leq(const MarkedBinaryTree& m, const MarkedBinaryTree& m_prime);
// All nodes of the symbolic ternary tree with length ≤ d.
FiniteTree mbt_truncate(const MarkedBinaryTree& m, std::size_t d);

// c(0) = 00, c(1) = 01, c(2) = 10, extended letterwise.
std::string                code_c(std::string_view s);
std::optional<std::string> decode_c_preimage(std::string_view w);
// Prefix closure of the c-image of a tree over {0,1,2}.
FiniteTree encode_C(const FiniteTree& t);

// Decides C(T_A) ≼ C(T_B) on finite truncations of the binary trees. The left
// tree is cut at 2(maxlen + 1) + 2, maxlen being the longest string of A ∪ B,
// and witnesses up to 2(|longest of B| + 1) letters are tried.
std::optional<std::string> c_stage_leq(const NodeSet& a, const NodeSet& b);

// All strings over `alphabet` of length ≤ d in shortlex order.
std::vector<std::string> strings_up_to(std::string_view alphabet, std::size_t d);

}  // namespace cbqo::trees
