#include "cbqo/subset_qo.hpp"

#include <algorithm>
#include <functional>

namespace cbqo::subset {

namespace {

  bool is_base_letter(Letter l) {
    const auto& n = l.name();
    return n.size() == 1 && n[0] >= 'a' && n[0] <= 'd';
  }

  // The string w of an indexed generator x[w], or empty for other letters.
  std::string index_of(Letter l) {
    const auto& n = l.name();
    if (n.size() >= 4 && n[0] == 'x' && n[1] == '[' && n.back() == ']') {
      return n.substr(2, n.size() - 3);
    }
    return {};
  }

  void require_abcd(std::string_view w) {
    if (w.find_first_not_of("abcd") != std::string_view::npos) {
      throw MalformedInput("'" + std::string(w) + "' is not a string over {a,b,c,d}");
    }
  }

  WordSet product(const WordSet& x, const WordSet& y) {
    WordSet out;
    for (const auto& p : x) {
      for (const auto& q : y) {
        out.insert(multiply(p, q));
      }
    }
    return out;
  }

}  // namespace

WordSet translate(const Word& g, const WordSet& b) {
  WordSet out;
  for (const auto& y : b) {
    out.insert(multiply(g, y));
  }
  return out;
}

bool translate_witness_holds(const WordSet& a, const WordSet& b, const std::vector<Word>& gs) {
  if (gs.empty()) {
    return false;
  }
  WordSet acc = translate(gs.front(), b);
  for (std::size_t i = 1; i < gs.size(); ++i) {
    WordSet next = translate(gs[i], b);
    WordSet meet;
    std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                          std::inserter(meet, meet.end()));
    acc.swap(meet);
  }
  return acc == a;
}

std::optional<std::vector<Word>> translate_qo_leq(const WordSet& a, const WordSet& b) {
  if (a.empty() || b.empty()) {
    throw DegenerateInput("translate_qo_leq expects nonempty sets");
  }
  const Word&                  a0 = *a.begin();
  std::set<Word, ShortlexLess> candidates;
  for (const auto& y : b) {
    candidates.insert(multiply(a0, invert(y)));
  }
  std::vector<Word> kept;
  for (const auto& g : candidates) {
    WordSet gb = translate(g, b);
    if (std::includes(gb.begin(), gb.end(), a.begin(), a.end())) {
      kept.push_back(g);
    }
  }
  if (!translate_witness_holds(a, b, kept)) {
    return std::nullopt;
  }
  return kept;
}

Edges t_edges(const trees::FiniteTree& t) {
  if (t.alphabet() != "ab") {
    throw MalformedInput("t_edges expects a tree over {a,b}");
  }
  Edges e;
  for (const auto& w : t.nodes()) {
    if (!t.contains(w + "a")) {
      e.t_a.insert(w);
    }
    if (!t.contains(w + "b")) {
      e.t_b.insert(w);
    }
  }
  return e;
}

trees::FiniteTree outline_S(const trees::FiniteTree& t) {
  auto           e = t_edges(t);
  trees::NodeSet nodes(t.nodes());
  for (const auto& w : e.t_a) {
    nodes.insert(w + "c");
  }
  for (const auto& w : e.t_b) {
    nodes.insert(w + "d");
  }
  return trees::FiniteTree("abcd", std::move(nodes));
}

Letter indexed_generator(std::string_view w) {
  if (w.empty()) {
    throw PreconditionError("x[w] needs a nonempty index string");
  }
  require_abcd(w);
  return Letter::of("x[" + std::string(w) + "]");
}

Word letters_word(std::string_view w) {
  require_abcd(w);
  std::vector<Letter> out;
  for (char ch : w) {
    out.push_back(Letter::of(std::string(1, ch)));
  }
  return Word(std::move(out));
}

std::shared_ptr<const WordSet> FMap::operator()(const std::string& w) const {
  require_abcd(w);
  if (w.size() > bound_) {
    throw BoundExceeded("f(" + w + ") exceeds the length bound " + std::to_string(bound_));
  }
  {
    std::lock_guard lock(mutex_);
    auto            it = memo_.find(w);
    if (it != memo_.end()) {
      return it->second;
    }
  }
  WordSet out;
  Word    ww = letters_word(w);
  if (w.empty()) {
    out.insert(Word());
  } else {
    for (std::size_t k = 1; k < w.size(); ++k) {
      auto left  = (*this)(w.substr(0, k));
      auto right = (*this)(w.substr(k));
      out.merge(product(*left, *right));
    }
    out.insert(concat(Word::letter(indexed_generator(w)), ww));
    if (w.size() == 1) {
      out.insert(ww);
    }
  }
  auto result = std::make_shared<const WordSet>(std::move(out));
  std::lock_guard lock(mutex_);
  return memo_.emplace(w, result).first->second;
}

const FMap& default_fmap() {
  static const FMap instance;
  return instance;
}

WordSet F_union(const trees::FiniteTree& t, const FMap& f) {
  WordSet out;
  for (const auto& w : t.nodes()) {
    auto part = f(w);
    out.insert(part->begin(), part->end());
  }
  return out;
}

WordSet G_map(const trees::FiniteTree& t, const FMap& f) {
  return F_union(outline_S(t), f);
}

std::string phi_project(const Word& g) {
  std::string out;
  for (Letter l : free_reduce(g)) {
    if (is_base_letter(l)) {
      out += l.sign() > 0 ? l.name() : std::string(1, static_cast<char>(l.name()[0] - 32));
    }
  }
  return out;
}

ItsahomResult itsahom_verify(const trees::FiniteTree& t, const std::string& w, const FMap& f) {
  if (t.alphabet() != "ab" || w.empty() || w.find_first_not_of("ab") != std::string::npos
      || !t.contains(w)) {
    throw PreconditionError("itsahom_verify needs a node w of T over {a,b} with |w| >= 1");
  }
  WordSet const g     = G_map(t, f);
  Word const    x_inv = Word::letter(indexed_generator(w).inverse());
  ItsahomResult r;
  for (const auto& h : g) {
    Word shifted = multiply(x_inv, h);
    if (g.count(shifted) != 0) {
      r.lhs.insert(std::move(shifted));
    }
  }
  r.rhs   = translate(letters_word(w), G_map(*trees::subtree(t, w), f));
  r.equal = r.lhs == r.rhs;
  return r;
}

unsigned long long finf_generator_index(Letter l) {
  const auto& n = l.name();
  if (is_base_letter(l)) {
    return static_cast<unsigned long long>(n[0] - 'a') + 1;
  }
  std::string w = index_of(l);
  if (w.empty() || w.find_first_not_of("abcd") != std::string::npos) {
    throw MalformedInput("'" + n + "' is not a generator of F_infinity");
  }
  if (w.size() > 30) {
    throw BoundExceeded("index string too long for the generator enumeration");
  }
  unsigned long long before = 4, level = 1, rank = 0;
  for (std::size_t len = 1; len < w.size(); ++len) {
    level *= 4;
    before += level;
  }
  for (char ch : w) {
    rank = rank * 4 + static_cast<unsigned long long>(ch - 'a');
  }
  return before + rank + 1;
}

Letter finf_generator(unsigned long long index) {
  if (index == 0) {
    throw PreconditionError("generator indices start at 1");
  }
  if (index <= 4) {
    return Letter::of(std::string(1, static_cast<char>('a' + index - 1)));
  }
  unsigned long long rest = index - 5, level = 4;
  std::size_t        len  = 1;
  while (rest >= level) {
    rest -= level;
    level *= 4;
    ++len;
  }
  std::string w(len, 'a');
  for (std::size_t i = len; i-- > 0;) {
    w[i] = static_cast<char>('a' + rest % 4);
    rest /= 4;
  }
  return indexed_generator(w);
}

Word embed_finf_to_f2(const Word& g) {
  Letter const        a = Letter::of("a"), b = Letter::of("b");
  std::vector<Letter> out;
  for (Letter l : g) {
    auto i = finf_generator_index(l);
    out.insert(out.end(), i, a);
    out.push_back(l.sign() > 0 ? b : b.inverse());
    out.insert(out.end(), i, a.inverse());
  }
  return free_reduce(Word(std::move(out)));
}

std::optional<Word> f2_preimage(const Word& w) {
  require_letters(w, {"a", "b"});
  Word const          r = free_reduce(w);
  std::vector<Letter> out;
  long long           level = 0;
  std::size_t         i     = 0;
  while (true) {
    while (i < r.size() && r[i].name() == "a") {
      level += r[i].sign();
      ++i;
    }
    if (i == r.size()) {
      break;
    }
    if (level < 1) {
      return std::nullopt;
    }
    Letter g = finf_generator(static_cast<unsigned long long>(level));
    while (i < r.size() && r[i].name() == "b") {
      out.push_back(r[i].sign() > 0 ? g : g.inverse());
      ++i;
    }
  }
  if (level != 0) {
    return std::nullopt;
  }
  return Word(std::move(out));
}

////////////////////////////////////////////////////////////////////////
// Free products
////////////////////////////////////////////////////////////////////////

FreeProduct::FreeProduct(long order) : order_(order) {
  if (order < 0 || order == 1) {
    throw PreconditionError("the order of h must be at least 2, or 0 for infinite");
  }
}

std::vector<FreeProduct::Syllable> FreeProduct::normalize(
    const std::vector<Syllable>& syllables) const {
  std::vector<Syllable> stack;
  auto reduce_h = [&](long k) {
    if (order_ == 0) {
      return k;
    }
    long m = k % order_;
    return m < 0 ? m + order_ : m;
  };
  for (const auto& s : syllables) {
    Syllable cur = s;
    if (auto* g = std::get_if<Word>(&cur)) {
      *g = free_reduce(*g);
    } else {
      cur = reduce_h(std::get<long>(cur));
    }
    // Merge with the top of the stack while the kinds match; a merge that
    // produces a trivial syllable exposes the previous one for merging.
    while (true) {
      bool trivial = std::holds_alternative<Word>(cur) ? std::get<Word>(cur).empty()
                                                       : std::get<long>(cur) == 0;
      if (trivial) {
        break;
      }
      if (stack.empty() || stack.back().index() != cur.index()) {
        stack.push_back(std::move(cur));
        break;
      }
      Syllable top = std::move(stack.back());
      stack.pop_back();
      if (std::holds_alternative<Word>(cur)) {
        cur = cbqo::multiply(std::get<Word>(top), std::get<Word>(cur));
      } else {
        cur = reduce_h(std::get<long>(top) + std::get<long>(cur));
      }
    }
  }
  return stack;
}

std::vector<FreeProduct::Syllable> FreeProduct::multiply(const std::vector<Syllable>& a,
                                                         const std::vector<Syllable>& b) const {
  std::vector<Syllable> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return normalize(all);
}

std::vector<FreeProduct::Syllable> FreeProduct::inverse(const std::vector<Syllable>& a) const {
  std::vector<Syllable> out;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    if (auto* g = std::get_if<Word>(&*it)) {
      out.emplace_back(invert(*g));
    } else {
      out.emplace_back(-std::get<long>(*it));
    }
  }
  return normalize(out);
}

std::vector<FreeProduct::Syllable> FreeProduct::conjugate(const Word&                  g,
                                                          const std::vector<Syllable>& a) const {
  std::vector<Syllable> all{g};
  all.insert(all.end(), a.begin(), a.end());
  all.emplace_back(invert(g));
  return normalize(all);
}

std::vector<FreeProduct::Syllable> FreeProduct::h_power(long k) const {
  return normalize({Syllable(k)});
}

std::vector<FreeProduct::Syllable> FreeProduct::group_element(const Word& g) const {
  return normalize({Syllable(g)});
}

std::string fp_str(const FPWord& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) {
      out += ' ';
    }
    if (auto* g = std::get_if<Word>(&s)) {
      out += g->str();
    } else {
      out += "h^" + std::to_string(std::get<long>(s));
    }
  }
  return out;
}

std::size_t h_syllable_count(const FPWord& w) {
  return static_cast<std::size_t>(std::count_if(
      w.begin(), w.end(), [](const auto& s) { return std::holds_alternative<long>(s); }));
}

std::vector<FPWord> K_map(const WordSet& a, const FreeProduct& fp) {
  if (a.empty()) {
    throw DegenerateInput("K_map expects a nonempty set");
  }
  std::vector<FPWord> out;
  for (const auto& x : a) {
    out.push_back(fp.conjugate(x, fp.h_power(1)));
  }
  return out;
}

bool K_member(const FPWord& w, const WordSet& a, const FreeProduct& fp, std::size_t bound) {
  FPWord const      target = fp.normalize(w);
  std::vector<long> exps;
  for (const auto& s : target) {
    if (auto* k = std::get_if<long>(&s)) {
      exps.push_back(*k);
    }
  }
  if (exps.empty()) {
    return target.empty();
  }
  if (exps.size() > bound || a.empty()) {
    return false;
  }
  std::vector<const Word*>            seq;
  std::function<bool(const FPWord&)> extend = [&](const FPWord& acc) {
    if (seq.size() == exps.size()) {
      return acc == target;
    }
    for (const auto& x : a) {
      if (!seq.empty() && *seq.back() == x) {
        continue;
      }
      seq.push_back(&x);
      bool found = extend(fp.multiply(acc, fp.conjugate(x, fp.h_power(exps[seq.size() - 1]))));
      seq.pop_back();
      if (found) {
        return true;
      }
    }
    return false;
  };
  return extend({});
}

std::set<FPWord> K_enumerate(const WordSet&     a,
                             const FreeProduct& fp,
                             std::size_t        max_factors,
                             long               max_exponent) {
  std::vector<FPWord> gens;
  for (const auto& x : a) {
    for (long k = 1; k <= max_exponent; ++k) {
      gens.push_back(fp.conjugate(x, fp.h_power(k)));
      gens.push_back(fp.conjugate(x, fp.h_power(-k)));
    }
  }
  std::set<FPWord>    out{FPWord{}};
  std::vector<FPWord> frontier{FPWord{}};
  for (std::size_t m = 0; m < max_factors; ++m) {
    std::vector<FPWord> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        auto q = fp.multiply(p, g);
        if (out.insert(q).second) {
          next.push_back(std::move(q));
        }
      }
    }
    frontier.swap(next);
  }
  return out;
}

std::vector<FPWord> K_universe(const WordSet&           seeds,
                               const std::vector<Word>& letters,
                               const FreeProduct&       fp,
                               std::size_t              max_syllables) {
  std::vector<FPWord> factors;
  for (const auto& x : seeds) {
    factors.push_back(fp.conjugate(x, fp.h_power(1)));
    factors.push_back(fp.conjugate(x, fp.h_power(-1)));
  }
  factors.push_back(fp.h_power(1));
  factors.push_back(fp.h_power(-1));
  for (const auto& l : letters) {
    factors.push_back(fp.group_element(l));
    factors.push_back(fp.group_element(invert(l)));
  }
  std::set<FPWord>    seen{FPWord{}};
  std::vector<FPWord> frontier{FPWord{}};
  for (int m = 0; m < 3; ++m) {
    std::vector<FPWord> next;
    for (const auto& p : frontier) {
      for (const auto& f : factors) {
        auto q = fp.multiply(p, f);
        if (q.size() <= max_syllables && seen.insert(q).second) {
          next.push_back(std::move(q));
        }
      }
    }
    frontier.swap(next);
  }
  return {seen.begin(), seen.end()};
}

ConjResult conj_qo_leq_K(const WordSet& a, const WordSet& b, const FreeProduct& fp) {
  if (a.empty() || b.empty()) {
    throw DegenerateInput("conj_qo_leq_K expects nonempty sets");
  }
  ConjResult result;
  result.witness = translate_qo_leq(a, b);

  const Word&                  a0 = *a.begin();
  std::set<Word, ShortlexLess> candidates;
  for (const auto& y : b) {
    candidates.insert(multiply(a0, invert(y)));
  }
  WordSet           seeds(a);
  std::set<Word>    letter_set;
  for (const auto& g : candidates) {
    auto gb = translate(g, b);
    seeds.insert(gb.begin(), gb.end());
  }
  for (const auto& s : seeds) {
    for (Letter l : s) {
      letter_set.insert(Word::letter(l.sign() > 0 ? l : l.inverse()));
    }
  }
  auto universe        = K_universe(seeds, {letter_set.begin(), letter_set.end()}, fp);
  result.universe_size = universe.size();

  auto in_conj = [&](const FPWord& w, const Word& g) {
    return K_member(fp.conjugate(invert(g), w), b, fp);
  };
  std::vector<Word> family;
  if (result.witness) {
    family = *result.witness;
  } else {
    for (const auto& g : candidates) {
      bool contains_ka = std::all_of(universe.begin(), universe.end(), [&](const FPWord& w) {
        return !K_member(w, a, fp) || in_conj(w, g);
      });
      if (contains_ka) {
        family.push_back(g);
      }
    }
    if (family.empty()) {
      family.assign(candidates.begin(), candidates.end());
    }
  }
  bool all_agree = true;
  for (const auto& w : universe) {
    bool lhs = K_member(w, a, fp);
    bool rhs = std::all_of(family.begin(), family.end(),
                           [&](const Word& g) { return in_conj(w, g); });
    if (lhs != rhs) {
      all_agree = false;
      if (!result.separating) {
        result.separating = w;
      }
      break;
    }
  }
  result.verified = result.witness.has_value() && all_agree;
  return result;
}

}  // namespace cbqo::subset
