#include "cbqo/monoid_shift.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

namespace cbqo::shift {

namespace {

  void require_m2(const Word& w) {
    if (!w.is_monoid()) {
      for (Letter l : w) {
        if (l.sign() < 0) {
          throw AlphabetViolation("inverse letter " + l.str() + " in an M2 word");
        }
      }
    }
    require_letters(w, {"a", "b"});
  }

  bool is_a(Letter l) {
    return l.name() == "a";
  }

  bool ends_with(const Word& w, const Word& suffix) {
    return suffix.size() <= w.size()
           && std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
  }

  bool starts_with(const Word& w, const Word& prefix) {
    return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
  }

  template <typename Candidates, typename Check>
  std::optional<Word> first_witness(const WordSet& a, Candidates&& candidates, Check&& check) {
    if (a.empty()) {
      throw DegenerateInput("the left-hand set must be nonempty");
    }
    for (const Word& m : candidates) {
      if (check(m)) {
        return m;
      }
    }
    return std::nullopt;
  }

}  // namespace

Word m2_word(std::string_view text) {
  Word w = Word::parse(text, Alphabet::monoid);
  require_m2(w);
  return w;
}

Word momega_word(std::string_view text) {
  Word w = Word::parse(text, Alphabet::monoid);
  for (Letter l : w) {
    momega_index(l);
  }
  return w;
}

unsigned long momega_index(Letter l) {
  const std::string& name = l.name();
  unsigned long      n    = 0;
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0' || l.sign() < 0) {
    throw MalformedInput("'" + l.str() + "' is not a generator x1, x2, ...");
  }
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size() || n == 0) {
    throw MalformedInput("'" + l.str() + "' is not a generator x1, x2, ...");
  }
  return n;
}

Word momega_generator(unsigned long n) {
  if (n == 0) {
    throw MalformedInput("M_omega generators are indexed from 1");
  }
  return Word::letter(Letter::of("x" + std::to_string(n)), Alphabet::monoid);
}

Word embed_momega(const Word& w) {
  Letter const        a = Letter::of("a"), b = Letter::of("b");
  std::vector<Letter> out;
  for (Letter l : w) {
    unsigned long n = momega_index(l);
    out.push_back(a);
    out.insert(out.end(), n, b);
  }
  return Word(std::move(out), Alphabet::monoid);
}

std::optional<Word> decode_momega(const Word& h) {
  require_m2(h);
  std::vector<Letter> out;
  std::size_t         i = 0;
  while (i < h.size()) {
    if (!is_a(h[i])) {
      return std::nullopt;
    }
    std::size_t j = i + 1;
    while (j < h.size() && !is_a(h[j])) {
      ++j;
    }
    if (j == i + 1) {
      return std::nullopt;
    }
    out.push_back(Letter::of("x" + std::to_string(j - i - 1)));
    i = j;
  }
  return Word(std::move(out), Alphabet::monoid);
}

Split canonical_split(const Word& h) {
  require_m2(h);
  // Peel abⁿ blocks (n ≥ 1) off the right end while possible.
  std::size_t start = h.size();
  while (start > 0) {
    std::size_t j = start;
    while (j > 0 && !is_a(h[j - 1])) {
      --j;
    }
    if (j == start || j == 0) {
      break;
    }
    start = j - 1;
  }
  return {h.prefix(start), h.suffix_from(start)};
}

std::size_t L_len(const Word& h) {
  return canonical_split(h).head.size();
}

bool star_eval(const Bitmap& p, const Word& h) {
  auto split = canonical_split(h);
  switch (split.head.size()) {
    case 0:
      return p.count(*decode_momega(h)) != 0;
    case 1:
      return true;
    default:
      return false;
  }
}

bool shift_act_eval(const Word& g, const Evaluator& q, const Word& h) {
  return q(concat(h, g));
}

bool suffix_witness_holds(const WordSet& a, const WordSet& b, const Word& m) {
  WordSet am;
  for (const Word& x : a) {
    am.insert(concat(x, m));
  }
  WordSet bm;
  for (const Word& y : b) {
    if (ends_with(y, m)) {
      bm.insert(y);
    }
  }
  return am == bm;
}

bool prefix_witness_holds(const WordSet& a, const WordSet& b, const Word& m) {
  WordSet ma;
  for (const Word& x : a) {
    ma.insert(concat(m, x));
  }
  WordSet bm;
  for (const Word& y : b) {
    if (starts_with(y, m)) {
      bm.insert(y);
    }
  }
  return ma == bm;
}

std::optional<Word> suffix_qo_leq(const WordSet& a, const WordSet& b) {
  std::set<Word, ShortlexLess> candidates;
  for (const Word& y : b) {
    for (std::size_t i = 0; i <= y.size(); ++i) {
      candidates.insert(y.suffix_from(i));
    }
  }
  return first_witness(a, candidates,
                       [&](const Word& m) { return suffix_witness_holds(a, b, m); });
}

std::optional<Word> prefix_qo_leq(const WordSet& a, const WordSet& b) {
  std::set<Word, ShortlexLess> candidates;
  for (const Word& y : b) {
    for (std::size_t i = 0; i <= y.size(); ++i) {
      candidates.insert(y.prefix(i));
    }
  }
  return first_witness(a, candidates,
                       [&](const Word& m) { return prefix_witness_holds(a, b, m); });
}

Word bar_map(const Word& w) {
  require_m2(w);
  // Runs of equal letters, emitted in reverse order.
  std::vector<std::pair<Letter, std::size_t>> runs;
  for (Letter l : w) {
    if (!runs.empty() && runs.back().first == l) {
      ++runs.back().second;
    } else {
      runs.emplace_back(l, 1);
    }
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    out.insert(out.end(), it->second, it->first);
  }
  return Word(std::move(out), w.alphabet());
}

WordSet bar_set(const WordSet& a) {
  WordSet out;
  for (const Word& w : a) {
    out.insert(bar_map(w));
  }
  return out;
}

}  // namespace cbqo::shift
