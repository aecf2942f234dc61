#include "cbqo/trees.hpp"

#include <algorithm>
#include <vector>

namespace cbqo::trees {

namespace {

  bool has_prefix(std::string_view s, std::string_view p) {
    return s.substr(0, p.size()) == p;
  }

  std::vector<std::string> shortlex(const NodeSet& nodes) {
    std::vector<std::string> out(nodes.begin(), nodes.end());
    std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      return a.size() < b.size();
    });
    return out;
  }

  void require_binary(const NodeSet& s, const char* what) {
    for (const auto& w : s) {
      if (w.find_first_not_of("01") != std::string::npos) {
        throw MalformedInput(std::string(what) + " string '" + w + "' is not binary");
      }
    }
  }

  std::size_t max_length(const NodeSet& s) {
    std::size_t m = 0;
    for (const auto& w : s) {
      m = std::max(m, w.size());
    }
    return m;
  }

  // Nodes of C(t) of length ≤ cut, where t holds all nodes of a ternary tree
  // of length ≤ ⌈cut / 2⌉.
  NodeSet c_image_cut(const NodeSet& t, std::size_t cut) {
    NodeSet out;
    for (const auto& s : t) {
      std::string c = code_c(s);
      for (std::size_t k = 0; k <= std::min(c.size(), cut); ++k) {
        out.insert(c.substr(0, k));
      }
    }
    return out;
  }

}  // namespace

std::optional<std::string> missing_prefix(const NodeSet& nodes) {
  for (const auto& s : shortlex(nodes)) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      std::string p = s.substr(0, k);
      if (nodes.count(p) == 0) {
        return p;
      }
    }
  }
  return std::nullopt;
}

FiniteTree::FiniteTree(std::string alphabet, NodeSet nodes)
    : alphabet_(std::move(alphabet)), nodes_(std::move(nodes)) {
  if (nodes_.empty()) {
    throw MalformedInput("a tree must contain the empty string");
  }
  for (const auto& s : nodes_) {
    auto bad = s.find_first_not_of(alphabet_);
    if (bad != std::string::npos) {
      throw MalformedInput("node '" + s + "' uses symbol '" + s[bad]
                           + "' outside the alphabet '" + alphabet_ + "'");
    }
  }
  if (auto p = missing_prefix(nodes_)) {
    throw MalformedInput("tree is not prefix-closed: missing prefix '"
                         + (p->empty() ? std::string("-") : *p) + "'");
  }
}

std::size_t FiniteTree::depth() const {
  return max_length(nodes_);
}

std::optional<FiniteTree> subtree(const FiniteTree& t, std::string_view u) {
  NodeSet out;
  for (const auto& s : t.nodes()) {
    if (has_prefix(s, u)) {
      out.insert(s.substr(u.size()));
    }
  }
  if (out.empty()) {
    return std::nullopt;
  }
  return FiniteTree(t.alphabet(), std::move(out));
}

std::optional<std::string> tree_leq(const FiniteTree& t, const FiniteTree& t_prime) {
  for (const auto& u : shortlex(t_prime.nodes())) {
    auto sub = subtree(t_prime, u);
    if (sub && sub->nodes() == t.nodes()) {
      return u;
    }
  }
  return std::nullopt;
}

std::optional<std::string> tree_leq_truncated(const NodeSet& t,
                                              const NodeSet& t_prime,
                                              std::size_t    depth,
                                              std::size_t    max_witness) {
  for (const auto& u : shortlex(t_prime)) {
    if (u.size() > max_witness) {
      break;
    }
    NodeSet sub;
    for (auto it = t_prime.lower_bound(u); it != t_prime.end() && has_prefix(*it, u); ++it) {
      if (it->size() - u.size() <= depth) {
        sub.insert(it->substr(u.size()));
      }
    }
    if (sub == t) {
      return u;
    }
  }
  return std::nullopt;
}

std::string hat(const Word& w) {
  require_letters(w, {"a", "b"});
  std::string out;
  for (Letter l : w) {
    if (l.sign() < 0) {
      throw AlphabetViolation("inverse letter in an M2 word: " + w.str());
    }
    out += l.name() == "a" ? '0' : '1';
  }
  return out;
}

Word unhat(std::string_view s) {
  std::vector<Letter> out;
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw MalformedInput("'" + std::string(s) + "' is not a binary string");
    }
    out.push_back(Letter::of(ch == '0' ? "a" : "b"));
  }
  return Word(std::move(out), Alphabet::monoid);
}

MarkedBinaryTree encode_t(const NodeSet& a) {
  if (a.empty()) {
    throw DegenerateInput("encode_t expects a nonempty set");
  }
  require_binary(a, "mark");
  return {a};
}

MarkedBinaryTree mbt_subtree(const MarkedBinaryTree& m, std::string_view u) {
  MarkedBinaryTree out;
  for (const auto& s : m.marks) {
    if (has_prefix(s, u)) {
      out.marks.insert(s.substr(u.size()));
    }
  }
  return out;
}

FiniteTree mbt_truncate(const MarkedBinaryTree& m, std::size_t d) {
  NodeSet nodes;
  for (auto& s : strings_up_to("01", d)) {
    nodes.insert(std::move(s));
  }
  for (const auto& w : m.marks) {
    if (w.size() + 1 <= d) {
      nodes.insert(w + "2");
    }
  }
  return FiniteTree("012", std::move(nodes));
}

std::optional<std::string> mbt_leq(const MarkedBinaryTree& m, const MarkedBinaryTree& m_prime) {
  if (m.marks.empty() || m_prime.marks.empty()) {
    throw DegenerateInput("mbt_leq expects nonempty mark sets");
  }
  require_binary(m.marks, "mark");
  require_binary(m_prime.marks, "mark");
  NodeSet candidates;
  for (const auto& s : m_prime.marks) {
    for (std::size_t k = 0; k <= s.size(); ++k) {
      candidates.insert(s.substr(0, k));
    }
  }
  std::size_t const d = std::max(max_length(m.marks), max_length(m_prime.marks)) + 1;
  for (const auto& u : shortlex(candidates)) {
    if (mbt_subtree(m_prime, u) != m) {
      continue;
    }
    auto lhs = mbt_truncate(m, d);
    auto rhs = subtree(mbt_truncate(m_prime, d + u.size()), u);
    if (!rhs || rhs->nodes() != lhs.nodes()) {
      throw Error("mark-set witness '" + u + "' does not equate the truncated trees");
    }
    return u;
  }
  return std::nullopt;
}

std::string code_c(std::string_view s) {
  std::string out;
  out.reserve(2 * s.size());
  for (char ch : s) {
    switch (ch) {
      case '0':
        out += "00";
        break;
      case '1':
        out += "01";
        break;
      case '2':
        out += "10";
        break;
      default:
        throw MalformedInput("'" + std::string(s) + "' is not a ternary string");
    }
  }
  return out;
}

std::optional<std::string> decode_c_preimage(std::string_view w) {
  if (w.size() % 2 != 0) {
    return std::nullopt;
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); i += 2) {
    auto block = w.substr(i, 2);
    if (block == "00") {
      out += '0';
    } else if (block == "01") {
      out += '1';
    } else if (block == "10") {
      out += '2';
    } else {
      return std::nullopt;
    }
  }
  return out;
}

FiniteTree encode_C(const FiniteTree& t) {
  if (t.alphabet() != "012") {
    throw MalformedInput("encode_C expects a tree over {0,1,2}");
  }
  return FiniteTree("01", c_image_cut(t.nodes(), static_cast<std::size_t>(-1)));
}

std::optional<std::string> c_stage_leq(const NodeSet& a, const NodeSet& b) {
  auto              ta     = encode_t(a);
  auto              tb     = encode_t(b);
  std::size_t const maxlen = std::max(max_length(a), max_length(b));
  std::size_t const depth  = 2 * (maxlen + 1) + 2;
  std::size_t const reach  = 2 * (max_length(b) + 1);
  NodeSet const     left   = c_image_cut(mbt_truncate(ta, (depth + 1) / 2).nodes(), depth);
  NodeSet const     right =
      c_image_cut(mbt_truncate(tb, (depth + reach + 1) / 2).nodes(), depth + reach);
  return tree_leq_truncated(left, right, depth, reach);
}

std::vector<std::string> strings_up_to(std::string_view alphabet, std::size_t d) {
  std::vector<std::string> out{""};
  std::size_t              level_begin = 0;
  for (std::size_t len = 1; len <= d; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char ch : alphabet) {
        out.push_back(out[i] + ch);
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace cbqo::trees
