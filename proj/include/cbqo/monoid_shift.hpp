#pragma once

// Word-level constructions on the free monoids M₂ = ⟨a,b⟩ and
// M_ω = ⟨x1, x2, ...⟩: the embedding x_n ↦ abⁿ, the canonical split and its
// length function L, the pointwise star map, and the suffix/prefix
// quasi-orders on finite subsets of M₂ together with the bar involution.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>

#include "cbqo/words.hpp"

namespace cbqo::shift {

using WordSet = std::set<Word>;

// Parses a word over {a, b} with the monoid flag set.
Word m2_word(std::string_view text);
// Parses a word over x1, x2, ... with the monoid flag set.
Word momega_word(std::string_view text);

// Index n of the generator `xn`; throws MalformedInput for other letters.
unsigned long momega_index(Letter l);
Word          momega_generator(unsigned long n);

Word embed_momega(const Word& w);
// Preimage of a word in the image of embed_momega, or nullopt.
std::optional<Word> decode_momega(const Word& h);

struct Split {
  Word head;  // h′
  Word tail;  // g, the longest suffix lying in the embedded copy of M_ω
};
Split       canonical_split(const Word& h);
std::size_t L_len(const Word& h);

// A point of 2^{M_ω} with finite support.
using Bitmap = std::set<Word>;

// p*(h): p(preimage of h) when L(h) = 0, 1 when L(h) = 1, 0 otherwise.
bool star_eval(const Bitmap& p, const Word& h);

// (g·q)(h) = q(h g).
using Evaluator = std::function<bool(const Word&)>;
bool shift_act_eval(const Word& g, const Evaluator& q, const Word& h);

// Witness m with A m = B ∩ M₂m, searched over suffixes of elements of B in
// shortlex order. Throws DegenerateInput when A is empty.
std::optional<Word> suffix_qo_leq(const WordSet& a, const WordSet& b);
// Witness m with m A = B ∩ mM₂, searched over prefixes of elements of B.
std::optional<Word> prefix_qo_leq(const WordSet& a, const WordSet& b);

bool suffix_witness_holds(const WordSet& a, const WordSet& b, const Word& m);
bool prefix_witness_holds(const WordSet& a, const WordSet& b, const Word& m);

// aⁿ⁰bᵐ⁰…aⁿᵏbᵐᵏ ↦ bᵐᵏaⁿᵏ…bᵐ⁰aⁿ⁰.
Word    bar_map(const Word& w);
WordSet bar_set(const WordSet& a);

}  // namespace cbqo::shift
