#pragma once

// Substring machinery over integer-coded strings, used for piece lengths of
// long relators and for Dehn's algorithm.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbqo/words.hpp"

namespace cbqo {

class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::span<const std::uint32_t> text);

  std::size_t text_size() const noexcept {
    return text_size_;
  }
  std::size_t num_states() const noexcept {
    return len_.size();
  }

  // Largest L such that pattern[0, L) occurs in the text.
  std::size_t longest_prefix_match(std::span<const std::uint32_t> pattern) const;

  struct Match {
    std::size_t length      = 0;
    std::size_t text_pos    = 0;
    std::size_t pattern_pos = 0;
  };
  // Longest common substring of the text and `pattern`; the leftmost
  // occurrence in the pattern is reported.
  Match longest_common_substring(std::span<const std::uint32_t> pattern) const;

 private:
  int step(int state, std::uint32_t code) const;

  std::size_t                text_size_ = 0;
  std::vector<std::uint32_t> alphabet_;  // sorted distinct codes
  std::vector<std::int32_t>  next_;      // num_states * alphabet size
  std::vector<std::int32_t>  link_;
  std::vector<std::int32_t>  len_;
  std::vector<std::int32_t>  first_end_;
};

std::vector<std::size_t> suffix_array(std::span<const std::uint32_t> s);
// lcp[i] = LCP(suffix sa[i-1], suffix sa[i]); lcp[0] = 0.
std::vector<std::size_t> lcp_array(std::span<const std::uint32_t> s,
                                   std::span<const std::size_t>   sa);

struct CyclicOverlap {
  std::size_t length = 0;
  // rotate(a, offset_a) and rotate(b, offset_b) share a prefix of `length`.
  std::size_t offset_a = 0;
  std::size_t offset_b = 0;
};

// Longest common subword of the cyclic words a and b among subwords of
// length at most min(|a|, |b|).
class CyclicOverlapIndex {
 public:
  explicit CyclicOverlapIndex(const CyclicWord& a);
  CyclicOverlap against(const CyclicWord& b) const;

 private:
  std::size_t     n_;
  SuffixAutomaton sam_;
};

CyclicOverlap cyclic_overlap(const CyclicWord& a, const CyclicWord& b);

// Longest common prefix of two distinct rotations of `c`, where rotations
// are distinct as words (shifts that differ by a multiple of the primitive
// period give the same word). Zero when every rotation is the same word.
CyclicOverlap self_overlap(const CyclicWord& c);

// codes of w followed by w[0, |w| - 1).
std::vector<std::uint32_t> doubled_codes(const Word& w);

}  // namespace cbqo
