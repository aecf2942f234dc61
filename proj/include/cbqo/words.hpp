#pragma once

// Words over named alphabets: the common currency of the library.
//
// A letter is an interned symbol plus a sign. Symbols are tokens such as
// `x`, `v3`, `x2` or the indexed generators `x[abba]`; the same Word type
// therefore serves {a,b}, {x,y}, {a,b,c,d}, graph vertices and the indexed
// generators of the free group on countably many letters.
//
// Text syntax: a lowercase token is a positive letter, the same token with
// its first character uppercased is the inverse (`x[ab]` / `X[ab]`), and `-`
// is the empty word. `Word::parse(w.str()) == w` for every word.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbqo/errors.hpp"

namespace cbqo {

struct Symbol {
  std::string   name;
  std::uint32_t id;
};

// Returns the unique Symbol for `name`, creating it on first use. Throws
// ParseError if `name` is not a valid positive token.
const Symbol* intern(std::string_view name);

class Letter {
 public:
  Letter(const Symbol* symbol, int sign);

  static Letter of(std::string_view name, int sign = +1) {
    return Letter(intern(name), sign);
  }

  const std::string& name() const noexcept {
    return symbol_->name;
  }
  const Symbol* symbol() const noexcept {
    return symbol_;
  }
  int sign() const noexcept {
    return sign_;
  }
  Letter inverse() const noexcept {
    return Letter(symbol_, -sign_, nocheck{});
  }
  // Dense code: 2*id for the positive letter, 2*id+1 for its inverse.
  std::uint32_t code() const noexcept {
    return 2 * symbol_->id + (sign_ < 0 ? 1U : 0U);
  }
  std::string str() const;

  friend bool operator==(Letter a, Letter b) noexcept {
    return a.symbol_ == b.symbol_ && a.sign_ == b.sign_;
  }
  // Ordered by token name, then the positive letter before its inverse.
  friend std::strong_ordering operator<=>(Letter a, Letter b) noexcept;

 private:
  struct nocheck {};
  Letter(const Symbol* symbol, int sign, nocheck) noexcept
      : symbol_(symbol), sign_(static_cast<std::int8_t>(sign)) {}

  const Symbol* symbol_;
  std::int8_t   sign_;
};

enum class Alphabet : std::uint8_t { group, monoid };

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters, Alphabet alphabet = Alphabet::group);

  static Word parse(std::string_view text, Alphabet alphabet = Alphabet::group);
  static Word letter(Letter l, Alphabet alphabet = Alphabet::group) {
    return Word({l}, alphabet);
  }

  std::string str() const;

  std::size_t size() const noexcept {
    return letters_.size();
  }
  bool empty() const noexcept {
    return letters_.empty();
  }
  Letter operator[](std::size_t i) const {
    return letters_[i];
  }
  Letter front() const {
    return letters_.front();
  }
  Letter back() const {
    return letters_.back();
  }
  auto begin() const noexcept {
    return letters_.begin();
  }
  auto end() const noexcept {
    return letters_.end();
  }
  std::span<const Letter> letters() const noexcept {
    return letters_;
  }
  Alphabet alphabet() const noexcept {
    return alphabet_;
  }
  bool is_monoid() const noexcept {
    return alphabet_ == Alphabet::monoid;
  }
  std::vector<std::uint32_t> codes() const;

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const {
    return subword(0, len);
  }
  Word suffix_from(std::size_t pos) const {
    return subword(pos, size() - pos);
  }

  // Equality and order ignore the alphabet flag; it constrains contents only.
  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::vector<Letter> letters_;
  Alphabet            alphabet_ = Alphabet::group;
};

// Concatenation without reduction. Monoid iff both operands are.
Word concat(const Word& a, const Word& b);
inline Word operator*(const Word& a, const Word& b) {
  return concat(a, b);
}
Word invert(const Word& w);
// w^n for any integer n (negative powers go through invert).
Word power(const Word& w, long n);

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
// free_reduce(a * b).
Word multiply(const Word& a, const Word& b);

Word rotate(const Word& w, std::size_t k);
std::set<Word> rotations(const Word& w);
bool is_rotation_of(const Word& a, const Word& b);
std::size_t least_rotation_index(std::span<const Letter> w);

// Length first, then lexicographic.
inline bool shortlex_less(const Word& a, const Word& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a, b);
  }
  bool operator()(const std::string& a, const std::string& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

// Throws MalformedInput naming the first letter of w whose generator is not
// among `names`.
void require_letters(const Word& w, std::initializer_list<std::string_view> names);

std::size_t max_common_prefix(const Word& a, const Word& b);
// Position of the first occurrence of `needle` in `hay`, or npos.
std::size_t find_subword(const Word& hay, const Word& needle, std::size_t from = 0);
inline bool contains_subword(const Word& hay, const Word& needle) {
  return find_subword(hay, needle) != static_cast<std::size_t>(-1);
}

struct PrimitiveRoot {
  Word        root;
  std::size_t exponent;
};
// w = root^exponent with exponent maximal. Throws DegenerateInput on ε.
PrimitiveRoot primitive_root(const Word& w);

// Rotation class of a cyclically reduced word, stored as its least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  // Throws PreconditionError unless `w` is cyclically reduced.
  explicit CyclicWord(const Word& w);

  const Word& representative() const noexcept {
    return rep_;
  }
  std::size_t size() const noexcept {
    return rep_.size();
  }
  std::string str() const {
    return rep_.str();
  }
  CyclicWord inverse() const {
    return CyclicWord(invert(rep_));
  }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  Word rep_;
};

struct CyclicReduction {
  Word       conjugator;
  CyclicWord core;
};
// For freely reduced w: w = conjugator * core.representative() * conjugator^-1.
// The conjugator absorbs the rotation that brings the core to its least form.
CyclicReduction cyclic_reduce(const Word& w);

// Free-reduces, cyclically reduces and canonicalizes.
CyclicWord cyclic_word(const Word& w);

}  // namespace cbqo

template <>
struct std::hash<cbqo::Word> {
  std::size_t operator()(const cbqo::Word& w) const noexcept;
};
