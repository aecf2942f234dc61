#include "cbqo/words.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace cbqo {

namespace {

  bool is_lower(char c) {
    return c >= 'a' && c <= 'z';
  }
  bool is_upper(char c) {
    return c >= 'A' && c <= 'Z';
  }
  bool is_digit(char c) {
    return c >= '0' && c <= '9';
  }

  // Length of the token body starting at text[pos] (whose first character has
  // already been accepted), or 0 if the body is malformed.
  std::size_t token_length(std::string_view text, std::size_t pos) {
    std::size_t i = pos + 1;
    while (i < text.size() && is_digit(text[i])) {
      ++i;
    }
    if (i < text.size() && text[i] == '[') {
      std::size_t j = i + 1;
      while (j < text.size() && (is_lower(text[j]) || is_digit(text[j]))) {
        ++j;
      }
      if (j == i + 1 || j >= text.size() || text[j] != ']') {
        return 0;
      }
      i = j + 1;
    }
    return i - pos;
  }

  class SymbolTable {
   public:
    const Symbol* get(std::string_view name) {
      std::lock_guard lock(mutex_);
      auto            it = by_name_.find(std::string(name));
      if (it != by_name_.end()) {
        return it->second.get();
      }
      auto sym = std::make_unique<Symbol>(
          Symbol{std::string(name), static_cast<std::uint32_t>(by_name_.size())});
      const Symbol* result = sym.get();
      by_name_.emplace(result->name, std::move(sym));
      return result;
    }

   private:
    std::mutex                                               mutex_;
    std::unordered_map<std::string, std::unique_ptr<Symbol>> by_name_;
  };

  SymbolTable& symbol_table() {
    static SymbolTable table;
    return table;
  }

  void check_alphabet(std::span<const Letter> letters, Alphabet alphabet) {
    if (alphabet != Alphabet::monoid) {
      return;
    }
    for (Letter l : letters) {
      if (l.sign() < 0) {
        throw AlphabetViolation("inverse letter " + l.str()
                                + " in a word over a monoid alphabet");
      }
    }
  }

  Alphabet join(Alphabet a, Alphabet b) {
    return (a == Alphabet::monoid && b == Alphabet::monoid) ? Alphabet::monoid
                                                            : Alphabet::group;
  }

}  // namespace

const Symbol* intern(std::string_view name) {
  if (name.empty() || !is_lower(name[0]) || token_length(name, 0) != name.size()) {
    throw ParseError("invalid generator token '" + std::string(name) + "'");
  }
  return symbol_table().get(name);
}

////////////////////////////////////////////////////////////////////////
// Letter
////////////////////////////////////////////////////////////////////////

Letter::Letter(const Symbol* symbol, int sign)
    : symbol_(symbol), sign_(static_cast<std::int8_t>(sign)) {
  if (symbol == nullptr || (sign != 1 && sign != -1)) {
    throw PreconditionError("letter needs a symbol and a sign of +1 or -1");
  }
}

std::string Letter::str() const {
  std::string s = symbol_->name;
  if (sign_ < 0) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
  if (a.symbol_ != b.symbol_) {
    int c = a.symbol_->name.compare(b.symbol_->name);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // +1 sorts before -1
  return b.sign_ <=> a.sign_;
}

////////////////////////////////////////////////////////////////////////
// Word
////////////////////////////////////////////////////////////////////////

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  check_alphabet(letters_, alphabet_);
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  if (text == "-") {
    return Word({}, alphabet);
  }
  if (text.empty()) {
    throw ParseError("empty text; the empty word is written '-'");
  }
  std::vector<Letter> letters;
  std::size_t         pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (!is_lower(c) && !is_upper(c)) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset "
                       + std::to_string(pos) + " in word '" + std::string(text) + "'");
    }
    std::size_t len = token_length(text, pos);
    if (len == 0) {
      throw ParseError("malformed indexed generator at offset " + std::to_string(pos)
                       + " in word '" + std::string(text) + "'");
    }
    std::string name(text.substr(pos, len));
    int         sign = is_upper(c) ? -1 : 1;
    name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    letters.emplace_back(intern(name), sign);
    pos += len;
  }
  return Word(std::move(letters), alphabet);
}

std::string Word::str() const {
  if (letters_.empty()) {
    return "-";
  }
  std::string out;
  for (Letter l : letters_) {
    out += l.str();
  }
  return out;
}

std::vector<std::uint32_t> Word::codes() const {
  std::vector<std::uint32_t> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    out.push_back(l.code());
  }
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw PreconditionError("subword range out of bounds");
  }
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len),
              alphabet_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
}

////////////////////////////////////////////////////////////////////////
// Free group operations
////////////////////////////////////////////////////////////////////////

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out), join(a.alphabet(), b.alphabet()));
}

Word invert(const Word& w) {
  if (w.is_monoid() && !w.empty()) {
    throw AlphabetViolation("cannot invert a nonempty word over a monoid alphabet");
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out), w.alphabet());
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? invert(w) : w;
  auto k    = static_cast<std::size_t>(n < 0 ? -n : n);
  std::vector<Letter> out;
  out.reserve(base.size() * k);
  for (std::size_t i = 0; i < k; ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return Word(std::move(out), w.alphabet());
}

Word free_reduce(const Word& w) {
  check_alphabet(w.letters(), w.alphabet());
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack), w.alphabet());
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) {
      return false;
    }
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != w.back().inverse());
}

Word multiply(const Word& a, const Word& b) {
  return free_reduce(concat(a, b));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) {
    return w;
  }
  k %= w.size();
  std::vector<Letter> out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return Word(std::move(out), w.alphabet());
}

std::set<Word> rotations(const Word& w) {
  std::set<Word> out;
  for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
    out.insert(rotate(w, k));
  }
  return out;
}

std::size_t least_rotation_index(std::span<const Letter> s) {
  // Two-candidate scan for the lexicographically least rotation.
  std::size_t const n = s.size();
  std::size_t       i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = s[(i + k) % n];
    Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

bool is_rotation_of(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return false;
  }
  if (a.empty()) {
    return true;
  }
  return rotate(a, least_rotation_index(a.letters()))
         == rotate(b, least_rotation_index(b.letters()));
}

void require_letters(const Word& w, std::initializer_list<std::string_view> names) {
  for (Letter l : w) {
    if (std::find(names.begin(), names.end(), std::string_view(l.name())) == names.end()) {
      throw MalformedInput("unexpected generator '" + l.name() + "' in word " + w.str());
    }
  }
}

std::size_t max_common_prefix(const Word& a, const Word& b) {
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

std::size_t find_subword(const Word& hay, const Word& needle, std::size_t from) {
  auto it = std::search(hay.begin() + std::min(from, hay.size()), hay.end(),
                        std::boyer_moore_horspool_searcher(
                            needle.begin(), needle.end(),
                            [](Letter l) { return std::hash<std::uint32_t>{}(l.code()); }));
  return it == hay.end() && !needle.empty() ? static_cast<std::size_t>(-1)
                                            : static_cast<std::size_t>(it - hay.begin());
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) {
    throw DegenerateInput("primitive root of the empty word");
  }
  // Smallest period from the prefix function; it divides |w| iff w is a power.
  std::size_t const        n = w.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) {
      k = fail[k - 1];
    }
    if (w[i] == w[k]) {
      ++k;
    }
    fail[i] = k;
  }
  std::size_t period = n - fail[n - 1];
  if (n % period != 0) {
    period = n;
  }
  return {w.prefix(period), n / period};
}

////////////////////////////////////////////////////////////////////////
// Cyclic words
////////////////////////////////////////////////////////////////////////

CyclicWord::CyclicWord(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    throw PreconditionError("cyclic word representative must be cyclically reduced: "
                            + w.str());
  }
  rep_ = rotate(w, least_rotation_index(w.letters()));
}

CyclicReduction cyclic_reduce(const Word& w) {
  if (!is_freely_reduced(w)) {
    throw PreconditionError("cyclic_reduce expects a freely reduced word: " + w.str());
  }
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word        core  = w.subword(lo, hi - lo);
  std::size_t shift = least_rotation_index(core.letters());
  // core = s t with least rotation t s, and core = s (t s) s^-1.
  Word conj = multiply(w.prefix(lo), core.prefix(shift));
  return {conj, CyclicWord(rotate(core, shift))};
}

CyclicWord cyclic_word(const Word& w) {
  return cyclic_reduce(free_reduce(w)).core;
}

}  // namespace cbqo

std::size_t std::hash<cbqo::Word>::operator()(const cbqo::Word& w) const noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (cbqo::Letter l : w) {
    h ^= l.code();
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
