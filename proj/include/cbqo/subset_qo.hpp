#pragma once

// Finite subsets of free groups under the translate-intersection order, the
// outline/f/F/G construction over F_∞ = ⟨a, b, c, d, x[w] …⟩, the projection
// Φ, a fixed embedding F_∞ → F₂, and the conjugate-generator map K into a
// free product with a cyclic group ⟨h⟩.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cbqo/trees.hpp"
#include "cbqo/words.hpp"

namespace cbqo::subset {

using WordSet = std::set<Word>;

// Left translate gB, freely reduced.
WordSet translate(const Word& g, const WordSet& b);

// Candidates a₀b⁻¹ (a₀ the least element of A, b ∈ B) with A ⊆ gB, in
// shortlex order; returned when their translates intersect to exactly A.
// Throws DegenerateInput on empty inputs.
std::optional<std::vector<Word>> translate_qo_leq(const WordSet& a, const WordSet& b);
// A = g₁B ∩ … ∩ gₙB for the given nonempty list.
bool translate_witness_holds(const WordSet& a, const WordSet& b, const std::vector<Word>& gs);

struct Edges {
  trees::NodeSet t_a;
  trees::NodeSet t_b;
};
Edges             t_edges(const trees::FiniteTree& t);
trees::FiniteTree outline_S(const trees::FiniteTree& t);

// Generator x[w] for a nonempty string w over {a,b,c,d}.
Letter indexed_generator(std::string_view w);
// Word whose letters are the characters of w (each of a, b, c, d).
Word letters_word(std::string_view w);

// Memoized f. Safe for concurrent callers.
class FMap {
 public:
  explicit FMap(std::size_t bound = 5) : bound_(bound) {}

  std::size_t bound() const noexcept {
    return bound_;
  }
  // Throws BoundExceeded when |w| exceeds the bound, MalformedInput on
  // symbols outside {a,b,c,d}.
  std::shared_ptr<const WordSet> operator()(const std::string& w) const;

 private:
  std::size_t                                                     bound_;
  mutable std::mutex                                              mutex_;
  mutable std::map<std::string, std::shared_ptr<const WordSet>>  memo_;
};

// Process-wide instance with the default bound.
const FMap& default_fmap();

WordSet F_union(const trees::FiniteTree& t, const FMap& f = default_fmap());
// F(S(T)) for a tree over {a, b}.
WordSet G_map(const trees::FiniteTree& t, const FMap& f = default_fmap());

// The {a,b,c,d} letters of the freely reduced form, inverse letters shown in
// uppercase.
std::string phi_project(const Word& g);

struct ItsahomResult {
  WordSet lhs;  // G(T) ∩ x[w]⁻¹G(T)
  WordSet rhs;  // w·G(T_w)
  bool    equal = false;
};
// Requires w ∈ T with 1 ≤ |w| over {a, b}; throws PreconditionError otherwise.
ItsahomResult itsahom_verify(const trees::FiniteTree& t,
                             const std::string&       w,
                             const FMap&              f = default_fmap());

// Position of a generator in the enumeration a, b, c, d, x[a], x[b], …,
// x[aa], … (length, then lexicographic), starting from 1.
unsigned long long finf_generator_index(Letter l);
Letter             finf_generator(unsigned long long index);
// gᵢ ↦ aⁱ b a⁻ⁱ.
Word embed_finf_to_f2(const Word& g);
// Preimage of a word in the image of the embedding, or nullopt.
std::optional<Word> f2_preimage(const Word& w);

// Element of G * ⟨h⟩ in normal form: alternating nontrivial free-group
// syllables and nonzero powers of h. For finite order n the exponents lie in
// [1, n-1].
class FreeProduct {
 public:
  using Syllable = std::variant<Word, long>;

  // order 0 means h has infinite order.
  explicit FreeProduct(long order = 0);

  long order() const noexcept {
    return order_;
  }
  std::vector<Syllable> normalize(const std::vector<Syllable>& syllables) const;
  std::vector<Syllable> multiply(const std::vector<Syllable>& a,
                                 const std::vector<Syllable>& b) const;
  std::vector<Syllable> inverse(const std::vector<Syllable>& a) const;
  std::vector<Syllable> conjugate(const Word& g, const std::vector<Syllable>& a) const;
  std::vector<Syllable> h_power(long k) const;
  std::vector<Syllable> group_element(const Word& g) const;

 private:
  long order_;
};

using FPWord = std::vector<FreeProduct::Syllable>;

std::string fp_str(const FPWord& w);
std::size_t h_syllable_count(const FPWord& w);

// Normal forms of x h x⁻¹ for x ∈ A. Throws DegenerateInput on empty A.
std::vector<FPWord> K_map(const WordSet& a, const FreeProduct& fp);

// Whether w lies in K(A), by enumerating products x₁h^{k₁}x₁⁻¹⋯x_mh^{k_m}x_m⁻¹
// with m ≤ bound, xᵢ ∈ A and consecutive xᵢ distinct. Only products whose
// normal form has the h-exponents of w can equal w, so the exponents are
// taken from w.
bool K_member(const FPWord& w, const WordSet& a, const FreeProduct& fp, std::size_t bound = 6);

// Literal enumeration of all such products with m ≤ max_factors and
// 1 ≤ |kᵢ| ≤ max_exponent (no distinctness constraint).
std::set<FPWord> K_enumerate(const WordSet&     a,
                             const FreeProduct& fp,
                             std::size_t        max_factors,
                             long               max_exponent);

// Test universe for K-identities: normal forms with at most `max_syllables`
// syllables of products of up to three factors drawn from x h^{±1} x⁻¹
// (x ∈ seeds), h^{±1} and the letters of `letters` and their inverses.
std::vector<FPWord> K_universe(const WordSet&            seeds,
                               const std::vector<Word>&  letters,
                               const FreeProduct&        fp,
                               std::size_t               max_syllables = 6);

struct ConjResult {
  std::optional<std::vector<Word>> witness;
  // Whether K(A) = ∩ gᵢK(B)gᵢ⁻¹ held on every universe word (witness case).
  bool verified = false;
  // Negative case: a universe word separating K(A) from the candidate
  // intersections.
  std::optional<FPWord> separating;
  std::size_t           universe_size = 0;
};
ConjResult conj_qo_leq_K(const WordSet& a, const WordSet& b, const FreeProduct& fp);

}  // namespace cbqo::subset
