#include "cbqo/overlap.hpp"

#include <algorithm>
#include <numeric>

namespace cbqo {

SuffixAutomaton::SuffixAutomaton(std::span<const std::uint32_t> text)
    : text_size_(text.size()), alphabet_(text.begin(), text.end()) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  std::size_t const k = std::max<std::size_t>(alphabet_.size(), 1);

  std::size_t const cap = 2 * text.size() + 2;
  len_.reserve(cap);
  link_.reserve(cap);
  first_end_.reserve(cap);
  next_.reserve(cap * k);

  auto new_state = [&](std::int32_t len, std::int32_t link, std::int32_t end) {
    len_.push_back(len);
    link_.push_back(link);
    first_end_.push_back(end);
    next_.insert(next_.end(), k, -1);
    return static_cast<std::int32_t>(len_.size() - 1);
  };

  new_state(0, -1, -1);
  std::int32_t last = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c   = static_cast<std::size_t>(
        std::lower_bound(alphabet_.begin(), alphabet_.end(), text[i]) - alphabet_.begin());
    auto cur = new_state(len_[last] + 1, 0, static_cast<std::int32_t>(i));
    auto p   = last;
    while (p != -1 && next_[p * k + c] == -1) {
      next_[p * k + c] = cur;
      p                = link_[p];
    }
    if (p != -1) {
      auto q = next_[p * k + c];
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        auto clone = new_state(len_[p] + 1, link_[q], first_end_[q]);
        std::copy_n(next_.begin() + q * k, k, next_.begin() + clone * k);
        while (p != -1 && next_[p * k + c] == q) {
          next_[p * k + c] = clone;
          p                = link_[p];
        }
        link_[q]   = clone;
        link_[cur] = clone;
      }
    }
    last = cur;
  }
}

int SuffixAutomaton::step(int state, std::uint32_t code) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), code);
  if (it == alphabet_.end() || *it != code) {
    return -1;
  }
  return next_[static_cast<std::size_t>(state) * alphabet_.size()
               + static_cast<std::size_t>(it - alphabet_.begin())];
}

std::size_t SuffixAutomaton::longest_prefix_match(
    std::span<const std::uint32_t> pattern) const {
  int         state = 0;
  std::size_t n     = 0;
  for (std::uint32_t c : pattern) {
    int nxt = step(state, c);
    if (nxt < 0) {
      break;
    }
    state = nxt;
    ++n;
  }
  return n;
}

SuffixAutomaton::Match SuffixAutomaton::longest_common_substring(
    std::span<const std::uint32_t> pattern) const {
  Match       best;
  int         state = 0;
  std::size_t len   = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    std::uint32_t c = pattern[i];
    while (state != 0 && step(state, c) < 0) {
      state = link_[state];
      len   = static_cast<std::size_t>(len_[state]);
    }
    int nxt = step(state, c);
    if (nxt >= 0) {
      state = nxt;
      ++len;
    } else {
      len = 0;
    }
    if (len > best.length) {
      best.length      = len;
      best.pattern_pos = i + 1 - len;
      best.text_pos    = static_cast<std::size_t>(first_end_[state]) + 1 - len;
    }
  }
  return best;
}

std::vector<std::size_t> suffix_array(std::span<const std::uint32_t> s) {
  std::size_t const        n = s.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    rank[i] = s[i];
  }
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair<std::size_t, long long>(
          rank[i], i + k < n ? static_cast<long long>(rank[i + k]) : -1LL);
    };
    std::sort(sa.begin(), sa.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    if (n == 0) {
      break;
    }
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    }
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1 || k >= n) {
      break;
    }
  }
  return sa;
}

std::vector<std::size_t> lcp_array(std::span<const std::uint32_t> s,
                                   std::span<const std::size_t>   sa) {
  std::size_t const        n = s.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    rank[sa[i]] = i;
  }
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) {
      ++h;
    }
    lcp[rank[i]] = h;
    if (h > 0) {
      --h;
    }
  }
  return lcp;
}

std::vector<std::uint32_t> doubled_codes(const Word& w) {
  std::vector<std::uint32_t> out = w.codes();
  if (!out.empty()) {
    out.insert(out.end(), out.begin(), out.end() - 1);
  }
  return out;
}

CyclicOverlapIndex::CyclicOverlapIndex(const CyclicWord& a)
    : n_(a.size()), sam_(doubled_codes(a.representative())) {}

CyclicOverlap CyclicOverlapIndex::against(const CyclicWord& b) const {
  std::size_t const m = b.size();
  if (n_ == 0 || m == 0) {
    return {};
  }
  auto pattern = doubled_codes(b.representative());
  auto match   = sam_.longest_common_substring(pattern);
  return {std::min({match.length, n_, m}), match.text_pos % n_, match.pattern_pos % m};
}

CyclicOverlap cyclic_overlap(const CyclicWord& a, const CyclicWord& b) {
  return CyclicOverlapIndex(a).against(b);
}

CyclicOverlap self_overlap(const CyclicWord& c) {
  if (c.size() == 0) {
    return {};
  }
  Word const        v = primitive_root(c.representative()).root;
  std::size_t const p = v.size();
  if (p == 1) {
    return {};
  }
  std::vector<std::uint32_t> d = v.codes();
  d.insert(d.end(), d.begin(), d.end());
  auto sa  = suffix_array(d);
  auto lcp = lcp_array(d, sa);

  // Maximum LCP over pairs of suffixes starting inside the first copy: the
  // minimum of the lcp run between consecutive such suffixes in SA order.
  CyclicOverlap best;
  bool          have_prev = false;
  std::size_t   prev = 0, run = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (have_prev) {
      run = std::min(run, lcp[i]);
    }
    if (sa[i] < p) {
      if (have_prev && run > best.length) {
        best = {run, prev, sa[i]};
      }
      have_prev = true;
      prev      = sa[i];
      run       = static_cast<std::size_t>(-1);
    }
  }
  if (best.offset_a > best.offset_b) {
    std::swap(best.offset_a, best.offset_b);
  }
  return best;
}

}  // namespace cbqo
