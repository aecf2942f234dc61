#pragma once

// Generators and brute-force oracles shared by the unit tests. Oracles here
// are written from the definitions and avoid the library code they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cbqo/words.hpp"

namespace testing {

using cbqo::Letter;
using cbqo::Word;

inline std::mt19937_64 rng(std::uint64_t salt) {
  return std::mt19937_64(0x5eed0000ULL + salt);
}

inline std::size_t pick(std::mt19937_64& g, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
}

inline std::vector<Letter> signed_letters(std::initializer_list<const char*> names) {
  std::vector<Letter> out;
  for (const char* n : names) {
    out.push_back(Letter::of(n));
    out.push_back(Letter::of(n, -1));
  }
  return out;
}

// Any word, not necessarily reduced.
inline Word random_word(std::mt19937_64& g, const std::vector<Letter>& letters, std::size_t len) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(letters[pick(g, 0, letters.size() - 1)]);
  }
  return Word(std::move(out));
}

inline Word random_reduced(std::mt19937_64& g, const std::vector<Letter>& letters, std::size_t len) {
  std::vector<Letter> out;
  while (out.size() < len) {
    Letter l = letters[pick(g, 0, letters.size() - 1)];
    if (!out.empty() && out.back() == l.inverse()) {
      continue;
    }
    out.push_back(l);
  }
  return Word(std::move(out));
}

inline Word random_cyclically_reduced(std::mt19937_64& g, const std::vector<Letter>& letters,
                                      std::size_t len) {
  while (true) {
    Word w = random_reduced(g, letters, len);
    if (w.size() < 2 || w.front() != w.back().inverse()) {
      return w;
    }
  }
}

// Reduction by repeatedly deleting the first adjacent inverse pair.
inline Word naive_reduce(const Word& w) {
  std::vector<Letter> v(w.begin(), w.end());
  bool                changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1].inverse()) {
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return Word(std::move(v));
}

inline Word naive_rotate(const Word& w, std::size_t k) {
  std::vector<Letter> v(w.begin(), w.end());
  std::rotate(v.begin(), v.begin() + static_cast<long>(k % std::max<std::size_t>(v.size(), 1)),
              v.end());
  return Word(std::move(v));
}

inline std::size_t naive_common_prefix(const Word& a, const Word& b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) {
    ++n;
  }
  return n;
}

inline bool naive_contains(const Word& hay, const Word& needle) {
  if (needle.size() > hay.size()) {
    return false;
  }
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < needle.size() && ok; ++j) {
      ok = hay[i + j] == needle[j];
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

inline std::vector<std::string> all_strings(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() < max_len) {
      for (char c : alphabet) {
        out.push_back(out[i] + c);
      }
    }
  }
  return out;
}

inline Word w(const char* text) {
  return Word::parse(text);
}

}  // namespace testing
