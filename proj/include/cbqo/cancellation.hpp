#pragma once

// Small-cancellation machinery: symmetrized relator sets, piece lengths and
// the C'(λ) check, Dehn's algorithm, the substitutions f₀/f₁/f_w, and the
// graph-group and tree-group presentations with their decoders.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cbqo/overlap.hpp"
#include "cbqo/trees.hpp"
#include "cbqo/words.hpp"

namespace cbqo::cancel {

struct Rational {
  long num = 0;
  long den = 1;

  // "P/Q" or "P"; throws ParseError.
  static Rational parse(std::string_view text);
  std::string     str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
};

struct PresentationMeta {
  std::string                kind;  // "tree-group", "graph-group" or "custom"
  std::optional<std::size_t> depth;
  std::string                source_hash;
  // λ for which C'(λ) was verified, with the relator hash it was verified on.
  std::optional<std::string> cprime;
  std::string                relator_hash;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word>        relators;
  PresentationMeta         meta;
};

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv_hex(std::string_view data);
std::string relator_hash(const std::vector<Word>& relators);

class SymmetrizedSet {
 public:
  SymmetrizedSet() = default;
  // Cyclically reduces each relator and closes under rotation and inversion.
  // Throws DegenerateInput on a relator that is trivial after reduction.
  static SymmetrizedSet from_relators(const std::vector<Word>& relators);

  // Distinct rotation classes (of the relators and their inverses), sorted.
  const std::vector<CyclicWord>& classes() const noexcept {
    return classes_;
  }
  // Every element, sorted; sizes grow with relator length, so use sparingly.
  std::vector<Word> elements() const;
  std::size_t       size() const;

  const std::optional<Rational>& certified() const noexcept {
    return certified_;
  }
  void set_certified(Rational lambda) {
    certified_ = lambda;
  }

  // Dehn search structures, built on first use.
  struct Index;
  const Index& index() const;

 private:
  struct IndexHolder;

  std::vector<CyclicWord>      classes_;
  std::optional<Rational>      certified_;
  std::shared_ptr<IndexHolder> index_;
};

struct Piece {
  std::size_t length  = 0;
  std::size_t class_a = 0;
  std::size_t class_b = 0;
  // rotate(classes[class_a], offset_a) and rotate(classes[class_b], offset_b)
  // are distinct elements sharing a prefix of `length`.
  std::size_t offset_a = 0;
  std::size_t offset_b = 0;
};

// Longest piece, by pairwise longest-common-substring on the classes.
Piece max_piece(const SymmetrizedSet& r, unsigned jobs = 1);
// Same value from the definition: sort every element and take the longest
// common prefix of neighbours.
std::size_t max_piece_scan(const SymmetrizedSet& r);

struct CPrimeResult {
  bool holds = true;
  // Pair of elements with the largest ratio piece / min(|r₁|, |r₂|).
  Piece       worst;
  std::size_t min_length = 0;
  Word        piece;
  Word        element_a;
  Word        element_b;
};
CPrimeResult check_cprime(const SymmetrizedSet& r, Rational lambda, unsigned jobs = 1);
// Runs check_cprime and records λ on success.
CPrimeResult certify(SymmetrizedSet& r, Rational lambda, unsigned jobs = 1);

// One reduction step, or nullopt when no subword of w is more than half of
// an element of R. Leftmost start, then the longest such subword, then the
// least element in sorted order having it as a prefix.
std::optional<Word> dehn_step(const Word& w, const SymmetrizedSet& r);
// Throws PreconditionError unless R is certified for some λ ≤ 1/6.
bool dehn_is_identity(const Word& w, const SymmetrizedSet& r);
std::vector<Word> dehn_trace(const Word& w, const SymmetrizedSet& r);
std::optional<std::size_t> word_order_bounded(const Word& w, const SymmetrizedSet& r,
                                              std::size_t max_order);

struct Torsion {
  Word        root;
  Word        relator;
  std::size_t exponent = 0;
};
// Cyclically reduces w, then looks for a class vⁿ with the core a rotation
// of a power of v.
std::optional<Torsion> torsion_classify(const Word& w, const SymmetrizedSet& r);

struct SubstitutionMap {
  Word x_image;
  Word y_image;
};
SubstitutionMap f0();
SubstitutionMap f1();
// f_w = f_{w₀} ∘ f_{w₁} ∘ …; f_ε is the identity. Throws MalformedInput on
// non-binary w.
SubstitutionMap f_w(std::string_view w);
// Throws MalformedInput on letters other than x, y.
Word subst_apply(const SubstitutionMap& m, const Word& word);
Word subst_apply(std::string_view w, const Word& word);
// Preimage under f_u by reading f_u-blocks chosen by their first letter.
std::optional<Word> block_parse(const Word& word, std::string_view u);

struct Graph {
  std::size_t                                       vertices = 0;
  std::set<std::pair<std::size_t, std::size_t>>     edges;  // i < j

  // Normalizes pair orientation; throws MalformedInput on loops or
  // out-of-range vertices.
  static Graph make(std::size_t vertices,
                    const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  bool has_edge(std::size_t i, std::size_t j) const;
  friend bool operator==(const Graph&, const Graph&) = default;
};

Presentation build_graph_group(const Graph& g);
Graph        decode_graph(const Presentation& p);

constexpr std::size_t max_tree_depth = 3;
// Relators for every w ∈ {0,1}^{≤d} in shortlex order, x before y. The node
// set may be empty (ε ∉ T); nodes longer than d are ignored. Throws
// BoundExceeded for d > 3 and MalformedInput for sets that are not
// prefix-closed.
Presentation   build_tree_group(const trees::NodeSet& t, std::size_t d);
trees::NodeSet decode_tree(const Presentation& p);

struct MappingCheck {
  bool                       combinatorial = false;
  bool                       relator_image = false;
  std::optional<std::string> violating_v;        // from the combinatorial pass
  std::optional<std::string> violating_v_image;  // from the relator pass
};
MappingCheck verify_relator_mapping(const trees::NodeSet& t,
                                    const trees::NodeSet& t_prime,
                                    std::string_view      w,
                                    std::size_t           d);

struct GraphHomCheck {
  bool combinatorial = false;
  bool relator_image = false;
};
GraphHomCheck verify_graph_hom(const Graph& s, const Graph& t, const std::vector<std::size_t>& f);

// Searches freely reduced α over {x, y}, |α| ≤ bound, in shortlex order for
// f_w(α)·x⁻¹ = 1. Requires a certified R.
std::optional<Word> surjectivity_probe(std::string_view w, const SymmetrizedSet& r,
                                       std::size_t bound);

}  // namespace cbqo::cancel
