#include "cbqo/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cbqo/cancellation.hpp"
#include "cbqo/monoid_shift.hpp"
#include "cbqo/overlap.hpp"
#include "cbqo/parallel.hpp"
#include "cbqo/qo_core.hpp"
#include "cbqo/subset_qo.hpp"
#include "cbqo/trees.hpp"

namespace cbqo::suites {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::string_view salt, std::uint64_t index) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : salt) {
    h = (h ^ c) * 1099511628211ULL;
  }
  return std::mt19937_64(splitmix64(seed ^ splitmix64(h + splitmix64(index))));
}

namespace {

using io::json;
using trees::NodeSet;
using WordSet = std::set<Word>;

////////////////////////////////////////////////////////////////////////
// Harness
////////////////////////////////////////////////////////////////////////

struct Outcome {
  bool        ok = true;
  std::string what;
  std::size_t size = 0;  // smaller counterexamples are reported first
};

class Tally {
 public:
  explicit Tally(const Config& c) : config_(c) {}

  template <typename Fn>
  void run(const std::string& part, std::size_t n, Fn&& fn) {
    std::vector<Outcome> outs(n);
    parallel_for(n, config_.jobs, [&](std::size_t i) { outs[i] = fn(i); });
    record(part, outs);
  }

  void record(const std::string& part, std::vector<Outcome>& outs) {
    std::size_t fails = 0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      auto& o = outs[i];
      o.what  = part + " #" + std::to_string(i) + (o.what.empty() ? "" : ": " + o.what);
      if (config_.corrupt) {
        o.ok = !o.ok;
      }
      ++result_.instances;
      if (!o.ok) {
        ++fails;
        ++result_.failures;
        if (!best_ || o.size < best_->size) {
          best_ = o;
        }
      }
    }
    result_.details["parts"][part] = {{"instances", outs.size()}, {"failures", fails}};
  }

  json& details() {
    return result_.details;
  }

  Result finish(std::string name) {
    result_.name = std::move(name);
    result_.pass = result_.failures == 0;
    if (best_) {
      result_.counterexample = best_->what;
    }
    return std::move(result_);
  }

 private:
  Config                 config_;
  Result                 result_;
  std::optional<Outcome> best_;
};

std::size_t count(const Config& c, std::size_t fallback) {
  return c.size.value_or(fallback);
}

template <typename Rng>
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <typename Rng>
bool coin(Rng& rng, double p = 0.5) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::string show(const std::string& s) {
  return s.empty() ? "-" : s;
}

std::string show(const NodeSet& t) {
  return io::nodes_to_json(t).dump();
}

std::string show(const WordSet& s) {
  return io::word_set_to_json(s).dump();
}

// Random prefix-closed set containing ε, over `alphabet`, of depth ≤ d.
template <typename Rng>
NodeSet random_tree(Rng& rng, std::string_view alphabet, std::size_t d, double p = 0.5) {
  NodeSet                  out{""};
  std::vector<std::string> frontier{""};
  while (!frontier.empty()) {
    std::string s = frontier.back();
    frontier.pop_back();
    if (s.size() == d) {
      continue;
    }
    for (char ch : alphabet) {
      if (coin(rng, p)) {
        out.insert(s + ch);
        frontier.push_back(s + ch);
      }
    }
  }
  return out;
}

// Every prefix-closed set containing ε over `alphabet` with depth ≤ d and
// at most max_nodes nodes.
std::vector<NodeSet> all_trees(std::string_view alphabet, std::size_t d, std::size_t max_nodes) {
  auto                 candidates = trees::strings_up_to(alphabet, d);
  std::vector<NodeSet> out;
  NodeSet              cur{""};
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == candidates.size()) {
      out.push_back(cur);
      return;
    }
    const auto& s = candidates[i];
    go(i + 1);
    if (!s.empty() && cur.size() < max_nodes && cur.count(s.substr(0, s.size() - 1)) != 0) {
      cur.insert(s);
      go(i + 1);
      cur.erase(s);
    }
  };
  go(1);
  std::sort(out.begin(), out.end(), [](const NodeSet& a, const NodeSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

const Letter& lx() {
  static const Letter l = Letter::of("x");
  return l;
}
const Letter& ly() {
  static const Letter l = Letter::of("y");
  return l;
}

std::vector<Letter> xy_letters() {
  return {lx(), lx().inverse(), ly(), ly().inverse()};
}

template <typename Rng>
Word random_reduced(Rng& rng, const std::vector<Letter>& letters, std::size_t len) {
  std::vector<Letter> out;
  while (out.size() < len) {
    Letter l = letters[uniform(rng, 0, letters.size() - 1)];
    if (!out.empty() && out.back() == l.inverse()) {
      continue;
    }
    out.push_back(l);
  }
  return Word(std::move(out));
}

template <typename Rng>
Word random_cyclic(Rng& rng, std::size_t len) {
  while (true) {
    Word w = random_reduced(rng, xy_letters(), len);
    if (is_cyclically_reduced(w)) {
      return w;
    }
  }
}

// Freely reduced words over `letters` of length in [1, max_len], shortlex.
std::vector<Word> reduced_words(const std::vector<Letter>& letters, std::size_t max_len) {
  std::vector<Word> out, level{Word()};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (Letter l : letters) {
        if (!w.empty() && w.back() == l.inverse()) {
          continue;
        }
        next.push_back(concat(w, Word::letter(l)));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level.swap(next);
  }
  return out;
}

std::vector<Word> cyclic_words(std::size_t max_len) {
  std::vector<Word> out;
  for (auto& w : reduced_words(xy_letters(), max_len)) {
    if (is_cyclically_reduced(w)) {
      out.push_back(std::move(w));
    }
  }
  return out;
}

bool is_prefix(std::string_view p, std::string_view s) {
  return s.substr(0, p.size()) == p;
}

// Some rotation of `small` is a subword of some rotation of `big`.
bool cyclic_contains(const Word& big, const Word& small) {
  if (small.empty() || small.size() > big.size()) {
    return small.empty();
  }
  SuffixAutomaton sam(doubled_codes(big));
  return sam.longest_common_substring(doubled_codes(small)).length >= small.size();
}

cancel::SymmetrizedSet certified(const cancel::Presentation& p, cancel::Rational lambda) {
  auto r = cancel::SymmetrizedSet::from_relators(p.relators);
  if (!cancel::certify(r, lambda).holds) {
    throw PreconditionError("presentation failed C'(" + lambda.str() + ")");
  }
  return r;
}

template <typename Rng>
cancel::Graph random_graph(Rng& rng, std::size_t vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vertices; ++i) {
    for (std::size_t j = i + 1; j < vertices; ++j) {
      if (coin(rng)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return cancel::Graph::make(vertices, edges);
}

std::vector<cancel::Graph> all_graphs(std::size_t max_vertices) {
  std::vector<cancel::Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        pairs.emplace_back(i, j);
      }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1U) {
          edges.push_back(pairs[k]);
        }
      }
      out.push_back(cancel::Graph::make(n, edges));
    }
  }
  return out;
}

std::string show(const cancel::Graph& g) {
  return io::graph_to_json(g).dump();
}

////////////////////////////////////////////////////////////////////////
// Small cancellation
////////////////////////////////////////////////////////////////////////

Result suite_cprime_graph(const Config& c) {
  Tally t(c);
  auto  fixed = all_graphs(3);
  auto  check = [](const cancel::Graph& g) {
    auto r   = cancel::SymmetrizedSet::from_relators(cancel::build_graph_group(g).relators);
    auto res = cancel::check_cprime(r, {1, 6});
    return Outcome{res.holds,
                   "graph " + show(g) + " fails C'(1/6): piece " + res.piece.str(),
                   g.vertices};
  };
  t.run("exhaustive", fixed.size(), [&](std::size_t i) { return check(fixed[i]); });
  t.run("random", count(c, 100), [&](std::size_t i) {
    auto rng = instance_rng(c.seed, "cprime-graph", i);
    return check(random_graph(rng, uniform(rng, 1, 5)));
  });
  return t.finish("cprime-graph");
}

Result suite_cprime_tree(const Config& c) {
  Tally t(c);
  auto  fixed = all_trees("01", 2, 64);
  fixed.insert(fixed.begin(), NodeSet{});
  std::vector<std::string> worst(fixed.size());
  auto check = [](const NodeSet& tree, std::size_t d, std::string& worst_out) {
    auto r    = cancel::SymmetrizedSet::from_relators(cancel::build_tree_group(tree, d).relators);
    auto res  = cancel::check_cprime(r, {1, 8});
    worst_out = std::to_string(res.worst.length) + "/" + std::to_string(res.min_length);
    return Outcome{res.holds,
                   "tree " + show(tree) + " at depth " + std::to_string(d)
                       + " fails C'(1/8): piece length " + worst_out,
                   tree.size() + 100 * d};
  };
  t.run("exhaustive-depth2", fixed.size(),
        [&](std::size_t i) { return check(fixed[i], 2, worst[i]); });
  std::vector<std::string> worst3(count(c, 20));
  t.run("random-depth3", count(c, 20), [&](std::size_t i) {
    auto rng = instance_rng(c.seed, "cprime-tree", i);
    return check(random_tree(rng, "01", 3, 0.6), 3, worst3[i]);
  });
  t.details()["trees_depth2"] = fixed.size();
  t.details()["worst_depth3"] = worst3;
  return t.finish("cprime-tree");
}

Result suite_overlap(const Config& c) {
  Tally t(c);
  // Pieces between the ε relators (powers of x and y) and the others.
  std::vector<std::size_t> eps_max(2, 0);
  auto const               full = trees::strings_up_to("01", 3);
  std::vector<NodeSet>     shapes{NodeSet{}, NodeSet(full.begin(), full.end())};
  t.run("epsilon-vs-rest", shapes.size(), [&](std::size_t i) {
    auto p = cancel::build_tree_group(shapes[i], 3);
    std::vector<CyclicWord> eps, rest;
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      auto cw = cyclic_word(p.relators[k]);
      (k < 2 ? eps : rest).push_back(cw);
      (k < 2 ? eps : rest).push_back(cw.inverse());
    }
    for (const auto& a : eps) {
      CyclicOverlapIndex idx(a);
      for (const auto& b : rest) {
        eps_max[i] = std::max(eps_max[i], idx.against(b).length);
      }
    }
    return Outcome{eps_max[i] <= 6,
                   "piece of length " + std::to_string(eps_max[i]) + " against a power of x or y",
                   eps_max[i]};
  });

  // Cross-branch pieces at depth 1: relators for w = 0 against w = 1.
  std::size_t           cross = 0;
  std::set<std::string> cross_pieces;
  {
    std::vector<CyclicWord> left, right;
    for (auto [w, n, m] : {std::tuple{"0", 59, 61}, std::tuple{"1", 67, 71}}) {
      auto f = cancel::f_w(w);
      for (const auto& r : {power(f.x_image, n), power(f.y_image, m)}) {
        auto& side = std::string(w) == "0" ? left : right;
        side.push_back(cyclic_word(r));
        side.push_back(cyclic_word(invert(r)));
      }
    }
    for (const auto& a : left) {
      CyclicOverlapIndex idx(a);
      for (const auto& b : right) {
        auto ov = idx.against(b);
        if (ov.length > cross) {
          cross = ov.length;
          cross_pieces.clear();
        }
        if (ov.length == cross) {
          cross_pieces.insert(rotate(a.representative(), ov.offset_a).prefix(ov.length).str());
        }
      }
    }
    std::vector<Outcome> outs{{cross == 5, "cross-branch piece length " + std::to_string(cross), 0}};
    t.record("cross-branch-depth1", outs);
  }

  // Pairwise longest-common-substring against the sorted prefix scan.
  auto shallow = all_trees("01", 1, 8);
  shallow.insert(shallow.begin(), NodeSet{});
  std::vector<cancel::Presentation> pres;
  for (const auto& tr : shallow) {
    pres.push_back(cancel::build_tree_group(tr, 0));
    pres.push_back(cancel::build_tree_group(tr, 1));
  }
  for (const auto& g : all_graphs(3)) {
    pres.push_back(cancel::build_graph_group(g));
  }
  t.run("scan-equivalence", pres.size(), [&](std::size_t i) {
    auto        r    = cancel::SymmetrizedSet::from_relators(pres[i].relators);
    std::size_t fast = cancel::max_piece(r).length, slow = cancel::max_piece_scan(r);
    return Outcome{fast == slow,
                   "max piece " + std::to_string(fast) + " vs scan " + std::to_string(slow)
                       + " on relators " + io::words_to_json(pres[i].relators).dump(),
                   pres[i].relators.size()};
  });
  t.details()["epsilon_max_piece"]     = *std::max_element(eps_max.begin(), eps_max.end());
  t.details()["cross_branch_piece"]    = cross;
  t.details()["cross_branch_witnesses"] = cross_pieces;
  return t.finish("overlap");
}

Result suite_orders(const Config& c) {
  Tally t(c);
  auto  tree_shapes = all_trees("01", 2, 64);
  tree_shapes.insert(tree_shapes.begin(), NodeSet{});
  t.run("tree-groups", tree_shapes.size(), [&](std::size_t i) {
    const auto& tr  = tree_shapes[i];
    auto        r   = certified(cancel::build_tree_group(tr, 2), {1, 8});
    bool        in  = tr.count("") != 0;
    auto        ox  = cancel::word_order_bounded(Word::parse("x"), r, 80);
    auto        oy  = cancel::word_order_bounded(Word::parse("y"), r, 80);
    auto        tx  = cancel::torsion_classify(Word::parse("x"), r);
    std::size_t ex = in ? 59 : 67, ey = in ? 61 : 71;
    bool ok = ox == ex && oy == ey && tx && tx->exponent == ex;
    return Outcome{ok,
                   "tree " + show(tr) + ": order(x)=" + (ox ? std::to_string(*ox) : "none")
                       + " order(y)=" + (oy ? std::to_string(*oy) : "none"),
                   tr.size()};
  });
  auto graphs = all_graphs(3);
  for (std::size_t i = 0; i < 10; ++i) {
    auto rng = instance_rng(c.seed, "orders", i);
    graphs.push_back(random_graph(rng, uniform(rng, 4, 5)));
  }
  t.run("graph-groups", graphs.size(), [&](std::size_t i) {
    const auto& g = graphs[i];
    auto        r = certified(cancel::build_graph_group(g), {1, 6});
    for (std::size_t a = 0; a < g.vertices; ++a) {
      Word va = Word::parse("v" + std::to_string(a));
      auto o  = cancel::word_order_bounded(va, r, 20);
      if (o != 7U) {
        return Outcome{false, "graph " + show(g) + ": order(v" + std::to_string(a) + ") wrong",
                       g.vertices};
      }
      for (std::size_t b = a + 1; b < g.vertices; ++b) {
        Word vab = concat(va, Word::parse("v" + std::to_string(b)));
        auto ob  = cancel::word_order_bounded(vab, r, 20);
        if (ob != (g.has_edge(a, b) ? 11U : 13U)) {
          return Outcome{false,
                         "graph " + show(g) + ": order(v" + std::to_string(a) + "v"
                             + std::to_string(b) + ") wrong",
                         g.vertices};
        }
      }
    }
    return Outcome{true, "", g.vertices};
  });
  return t.finish("orders");
}

Result suite_roundtrip(const Config& c) {
  Tally t(c);
  t.run("tree", count(c, 100), [&](std::size_t i) {
    auto        rng = instance_rng(c.seed, "roundtrip-tree", i);
    std::size_t d   = uniform(rng, 0, 3);
    NodeSet     tr  = coin(rng, 0.1) ? NodeSet{} : random_tree(rng, "01", d, 0.6);
    bool        ok  = cancel::decode_tree(cancel::build_tree_group(tr, d)) == tr;
    return Outcome{ok, "tree " + show(tr) + " at depth " + std::to_string(d), tr.size()};
  });
  t.run("graph", count(c, 100), [&](std::size_t i) {
    auto rng = instance_rng(c.seed, "roundtrip-graph", i);
    auto g   = random_graph(rng, uniform(rng, 1, 6));
    bool ok  = cancel::decode_graph(cancel::build_graph_group(g)) == g;
    return Outcome{ok, "graph " + show(g), g.vertices};
  });
  return t.finish("roundtrip");
}

Result suite_relmap(const Config& c) {
  Tally t(c);
  t.run("tree", count(c, 100), [&](std::size_t i) {
    auto              rng    = instance_rng(c.seed, "relmap-tree", i);
    std::size_t const d      = 3;
    NodeSet const     tprime = random_tree(rng, "01", d, 0.6);
    std::vector<std::string> nodes(tprime.begin(), tprime.end());
    std::string const w = nodes[uniform(rng, 0, nodes.size() - 1)];
    std::size_t const e = d - w.size();
    NodeSet           tr;
    for (const auto& s : tprime) {
      if (is_prefix(w, s) && s.size() - w.size() <= e) {
        tr.insert(s.substr(w.size()));
      }
    }
    bool const perturb = i % 10 == 9;
    if (perturb) {
      // Toggle one membership while keeping the set prefix-closed.
      std::vector<std::pair<bool, std::string>> moves;
      for (const auto& s : tr) {
        bool leaf = tr.count(s + "0") == 0 && tr.count(s + "1") == 0;
        if (leaf) {
          moves.emplace_back(false, s);
        }
        for (char ch : {'0', '1'}) {
          if (s.size() < e && tr.count(s + ch) == 0) {
            moves.emplace_back(true, s + ch);
          }
        }
      }
      auto [add, s] = moves[uniform(rng, 0, moves.size() - 1)];
      if (add) {
        tr.insert(s);
      } else {
        tr.erase(s);
      }
    }
    auto res = cancel::verify_relator_mapping(tr, tprime, w, d);
    bool ok  = res.combinatorial == res.relator_image && res.combinatorial == !perturb
              && res.violating_v == res.violating_v_image;
    return Outcome{ok,
                   "T=" + show(tr) + " T'=" + show(tprime) + " w=" + show(w)
                       + (perturb ? " (perturbed)" : ""),
                   tprime.size()};
  });
  t.run("graph", count(c, 100), [&](std::size_t i) {
    auto        rng = instance_rng(c.seed, "relmap-graph", i);
    std::size_t n   = uniform(rng, 2, 6);
    auto        tg  = random_graph(rng, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::size_t const        k = uniform(rng, 2, n);
    std::vector<std::size_t> f(perm.begin(), perm.begin() + static_cast<long>(k));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (tg.has_edge(f[a], f[b])) {
          edges.emplace_back(a, b);
        }
      }
    }
    auto       sg      = cancel::Graph::make(k, edges);
    bool const perturb = i % 10 == 9;
    if (perturb) {
      if (i % 20 == 9) {
        f[1] = f[0];
      } else if (sg.has_edge(0, 1)) {
        sg.edges.erase({0, 1});
      } else {
        sg.edges.insert({0, 1});
      }
    }
    auto res = cancel::verify_graph_hom(sg, tg, f);
    bool ok  = res.combinatorial == res.relator_image && res.combinatorial == !perturb;
    return Outcome{ok,
                   "S=" + show(sg) + " T=" + show(tg) + " f=" + json(f).dump()
                       + (perturb ? " (perturbed)" : ""),
                   n};
  });
  return t.finish("relmap");
}

Result suite_surjprobe(const Config& c) {
  Tally t(c);
  auto  shapes = all_trees("01", 2, 64);
  shapes.insert(shapes.begin(), NodeSet{});
  std::vector<std::string> const ws{"", "0", "1"};
  t.run("depth2", shapes.size() * ws.size(), [&](std::size_t i) {
    const auto& tr    = shapes[i / ws.size()];
    const auto& w     = ws[i % ws.size()];
    auto        r     = certified(cancel::build_tree_group(tr, 2), {1, 8});
    auto        alpha = cancel::surjectivity_probe(w, r, 4);
    bool        ok    = w.empty() ? alpha == Word::parse("x") : !alpha.has_value();
    return Outcome{ok,
                   "tree " + show(tr) + " w=" + show(w) + " preimage "
                       + (alpha ? alpha->str() : std::string("none")),
                   tr.size()};
  });
  return t.finish("surjprobe");
}

////////////////////////////////////////////////////////////////////////
// Substitution identities
////////////////////////////////////////////////////////////////////////

Word image(const cancel::SubstitutionMap& m, Letter a) {
  return cancel::subst_apply(m, Word::letter(a));
}

Result suite_lineup(const Config& c) {
  Tally t(c);
  auto  us      = trees::strings_up_to("01", 3);
  auto  letters = xy_letters();
  t.run("exhaustive", us.size() * 64, [&](std::size_t i) {
    const auto& u  = us[i / 64];
    auto        m  = cancel::f_w(u);
    Letter      a = letters[i % 64 / 16], b = letters[i % 16 / 4], cc = letters[i % 4];
    Word        fa = image(m, a), fb = image(m, b), fbc = concat(fb, image(m, cc));
    for (std::size_t p = find_subword(fbc, fa); p != static_cast<std::size_t>(-1);
         p             = find_subword(fbc, fa, p + 1)) {
      if (p != 0 && p != fb.size()) {
        return Outcome{false,
                       "u=" + show(u) + ": f(" + a.str() + ") straddles f(" + b.str() + ")f("
                           + cc.str() + ") at " + std::to_string(p),
                       u.size()};
      }
    }
    return Outcome{true, "", u.size()};
  });
  t.run("random-subword", count(c, 500), [&](std::size_t i) {
    auto              rng   = instance_rng(c.seed, "lineup", i);
    std::string const u     = us[uniform(rng, 0, us.size() - 1)];
    Word const        beta  = random_reduced(rng, letters, uniform(rng, 1, 6));
    Word              alpha = random_reduced(rng, letters, uniform(rng, 1, 4));
    if (coin(rng)) {
      std::size_t len = uniform(rng, 1, beta.size());
      alpha           = beta.subword(uniform(rng, 0, beta.size() - len), len);
    }
    auto m       = cancel::f_w(u);
    bool premise = contains_subword(cancel::subst_apply(m, beta), cancel::subst_apply(m, alpha));
    bool ok      = !premise || contains_subword(beta, alpha);
    return Outcome{ok, "u=" + show(u) + " alpha=" + alpha.str() + " beta=" + beta.str(),
                   alpha.size() + beta.size()};
  });
  return t.finish("lineup");
}

Result suite_functioncyclic(const Config& c) {
  Tally t(c);
  auto  ws    = trees::strings_up_to("01", 2);
  auto  words = cyclic_words(5);
  // For each w, the first α seen with each image class.
  std::vector<std::map<CyclicWord, Word>> first(ws.size());
  std::vector<std::vector<CyclicWord>>    images(ws.size());
  parallel_for(ws.size(), c.jobs, [&](std::size_t k) {
    auto m = cancel::f_w(ws[k]);
    for (const auto& a : words) {
      auto cls = cyclic_word(cancel::subst_apply(m, a));
      first[k].try_emplace(cls, a);
      images[k].push_back(cls);
    }
  });
  t.run("exhaustive", ws.size() * words.size(), [&](std::size_t i) {
    std::size_t k = i / words.size(), j = i % words.size();
    const Word& a  = words[j];
    const Word& a0 = first[k].at(images[k][j]);
    return Outcome{is_rotation_of(a, a0),
                   "w=" + show(ws[k]) + ": f(" + a.str() + ") is a rotation of f(" + a0.str()
                       + ")",
                   a.size()};
  });
  t.run("random", count(c, 500), [&](std::size_t i) {
    auto        rng   = instance_rng(c.seed, "functioncyclic", i);
    const auto& w     = ws[uniform(rng, 0, ws.size() - 1)];
    Word const  alpha = random_cyclic(rng, uniform(rng, 1, 5));
    Word        beta  = coin(rng) ? rotate(alpha, uniform(rng, 0, alpha.size() - 1))
                                  : random_cyclic(rng, uniform(rng, 1, 5));
    auto m       = cancel::f_w(w);
    bool premise = is_rotation_of(cancel::subst_apply(m, alpha), cancel::subst_apply(m, beta));
    bool ok      = !premise || is_rotation_of(alpha, beta);
    return Outcome{ok, "w=" + show(w) + " alpha=" + alpha.str() + " beta=" + beta.str(),
                   alpha.size() + beta.size()};
  });
  return t.finish("functioncyclic");
}

Outcome cyclesubword_case(const std::string& w, const std::string& v, const Word& alpha,
                          const Word& beta, const SuffixAutomaton* sam_w_alpha) {
  Word const r1 = cancel::subst_apply(w, alpha);
  Word const r2 = cancel::subst_apply(v, beta);
  bool       premise;
  if (sam_w_alpha != nullptr) {
    premise = r2.size() <= r1.size()
              && sam_w_alpha->longest_common_substring(doubled_codes(r2)).length >= r2.size();
  } else {
    premise = cyclic_contains(r1, r2);
  }
  std::string const what = "w=" + show(w) + " v=" + show(v) + " alpha=" + alpha.str()
                           + " beta=" + beta.str();
  std::size_t const size = alpha.size() + beta.size() + w.size() + v.size();
  if (!premise) {
    return {true, what, size};
  }
  if (!is_prefix(v, w) && !is_prefix(w, v)) {
    return {false, what + ": indices incomparable", size};
  }
  if (is_prefix(v, w) && !cyclic_contains(cancel::subst_apply(w.substr(v.size()), alpha), beta)) {
    return {false, what + ": no rotation of f_w'(alpha) contains beta", size};
  }
  if (is_prefix(w, v) && !cyclic_contains(alpha, cancel::subst_apply(v.substr(w.size()), beta))) {
    return {false, what + ": no rotation of alpha contains f_v'(beta)", size};
  }
  return {true, what, size};
}

Result suite_cyclesubword(const Config& c) {
  Tally t(c);
  auto  ws    = trees::strings_up_to("01", 2);
  auto  words = cyclic_words(3);
  std::size_t const nw = ws.size(), na = words.size();
  // One automaton per (w, α), shared across all (v, β).
  std::vector<std::unique_ptr<SuffixAutomaton>> sams(nw * na);
  parallel_for(nw * na, c.jobs, [&](std::size_t k) {
    sams[k] = std::make_unique<SuffixAutomaton>(
        doubled_codes(cancel::subst_apply(ws[k / na], words[k % na])));
  });
  t.run("exhaustive", nw * na * nw * na, [&](std::size_t i) {
    std::size_t outer = i / (nw * na), inner = i % (nw * na);
    return cyclesubword_case(ws[outer / na], ws[inner / na], words[outer % na],
                             words[inner % na], sams[outer].get());
  });
  t.run("random", count(c, 500), [&](std::size_t i) {
    auto        rng   = instance_rng(c.seed, "cyclesubword", i);
    std::string w     = ws[uniform(rng, 0, nw - 1)];
    std::string v     = ws[uniform(rng, 0, nw - 1)];
    Word const  alpha = random_cyclic(rng, uniform(rng, 2, 5));
    Word        beta  = random_cyclic(rng, uniform(rng, 1, 5));
    if (coin(rng)) {
      // A cyclic subword of α, so the premise holds with v = w.
      v = w;
      for (int tries = 0; tries < 20; ++tries) {
        std::size_t len = uniform(rng, 1, alpha.size());
        Word cand = rotate(alpha, uniform(rng, 0, alpha.size() - 1)).prefix(len);
        if (is_cyclically_reduced(cand)) {
          beta = cand;
          break;
        }
      }
    }
    return cyclesubword_case(w, v, alpha, beta, nullptr);
  });
  return t.finish("cyclesubword");
}

Result suite_composed(const Config& c) {
  Tally t(c);
  auto  idx = trees::strings_up_to("01", 2);
  std::vector<long> exps;
  for (long k = 1; k <= 6; ++k) {
    exps.push_back(k);
    exps.push_back(-k);
  }
  struct Target {
    std::string t;
    long        k;
  };
  std::map<CyclicWord, std::vector<Target>> targets;
  std::set<std::size_t>                     lengths;
  for (const auto& tt : idx) {
    for (long k : exps) {
      Word p = power(cancel::f_w(tt).x_image, k);
      targets[cyclic_word(p)].push_back({tt, k});
      lengths.insert(p.size());
    }
  }
  auto expected = [](const std::string& tt, const std::string& u, const std::string& v, long k,
                     long l, long m) {
    return u == v && tt == u + "0" && k == m && (k == 1 || k == -1) && l == 5 * k;
  };
  auto rotations_of = [](const Word& w) {
    std::size_t       p = primitive_root(w).root.size();
    std::vector<Word> out;
    for (std::size_t s = 0; s < p; ++s) {
      out.push_back(rotate(w, s));
    }
    return out;
  };

  // Every (u, l, v, m): products p·q of rotations, matched against targets.
  std::size_t const        nu = idx.size(), ne = exps.size();
  std::vector<std::string> found(nu * ne * nu * ne);
  t.run("exhaustive", found.size(), [&](std::size_t i) {
    std::size_t iu = i / (ne * nu * ne), il = i / (nu * ne) % ne, iv = i / ne % nu, im = i % ne;
    const auto &u = idx[iu], &v = idx[iv];
    long const  l = exps[il], m = exps[im];
    auto        ps = rotations_of(power(cancel::f_w(u).x_image, l));
    auto        qs = rotations_of(power(cancel::f_w(v).y_image, m));
    std::string sols;
    bool        ok = true;
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        // Products are concatenations without cancellation.
        if (lengths.count(p.size() + q.size()) == 0 || p.back() == q.front().inverse()) {
          continue;
        }
        Word prod = concat(p, q);
        if (!is_cyclically_reduced(prod)) {
          continue;
        }
        auto it = targets.find(cyclic_word(prod));
        if (it == targets.end()) {
          continue;
        }
        for (const auto& tg : it->second) {
          sols += "(t=" + show(tg.t) + ",k=" + std::to_string(tg.k) + ")";
          ok = ok && expected(tg.t, u, v, tg.k, l, m);
        }
      }
    }
    found[i] = sols;
    return Outcome{ok,
                   "u=" + show(u) + " l=" + std::to_string(l) + " v=" + show(v)
                       + " m=" + std::to_string(m) + " factors " + sols,
                   u.size() + v.size()};
  });
  // The expected factorizations must appear.
  std::vector<Outcome> complete;
  for (std::size_t iu = 0; iu < nu; ++iu) {
    if (idx[iu].size() > 1) {
      continue;
    }
    for (long k : {1L, -1L}) {
      std::size_t il = static_cast<std::size_t>(
          std::find(exps.begin(), exps.end(), 5 * k) - exps.begin());
      std::size_t im = static_cast<std::size_t>(std::find(exps.begin(), exps.end(), k) - exps.begin());
      std::string const want = "(t=" + idx[iu] + "0,k=" + std::to_string(k) + ")";
      bool              hit  = found[((iu * ne + il) * nu + iu) * ne + im].find(want)
                           != std::string::npos;
      complete.push_back({hit, "missing factorization " + want + " for u=" + show(idx[iu]), 0});
    }
  }
  t.record("expected-solutions", complete);

  // Random cuts of rotations of f_t(x^k) into two factors.
  std::map<CyclicWord, std::vector<std::pair<std::string, long>>> xs, ys;
  for (const auto& u : idx) {
    for (long k : exps) {
      xs[cyclic_word(power(cancel::f_w(u).x_image, k))].emplace_back(u, k);
      ys[cyclic_word(power(cancel::f_w(u).y_image, k))].emplace_back(u, k);
    }
  }
  t.run("random-cuts", count(c, 500), [&](std::size_t i) {
    auto              rng = instance_rng(c.seed, "composed", i);
    std::string const tt  = idx[uniform(rng, 0, nu - 1)];
    long const        k   = exps[uniform(rng, 0, ne - 1)];
    Word const        fx  = power(cancel::f_w(tt).x_image, k);
    Word const        r   = rotate(fx, uniform(rng, 0, fx.size() - 1));
    std::size_t const cut = uniform(rng, 1, r.size() - 1 + (r.size() == 1 ? 1 : 0));
    Word const p = r.prefix(std::min(cut, r.size())), q = r.suffix_from(std::min(cut, r.size()));
    if (p.empty() || q.empty() || !is_cyclically_reduced(p) || !is_cyclically_reduced(q)) {
      return Outcome{true, "", 0};
    }
    auto px = xs.find(cyclic_word(p));
    auto qy = ys.find(cyclic_word(q));
    if (px == xs.end() || qy == ys.end()) {
      return Outcome{true, "", 0};
    }
    for (const auto& [u, l] : px->second) {
      for (const auto& [v, m] : qy->second) {
        if (!expected(tt, u, v, k, l, m)) {
          return Outcome{false,
                         "t=" + show(tt) + " k=" + std::to_string(k) + " splits as u=" + show(u)
                             + " l=" + std::to_string(l) + " v=" + show(v)
                             + " m=" + std::to_string(m),
                         tt.size()};
        }
      }
    }
    return Outcome{true, "", 0};
  });
  return t.finish("composed");
}

////////////////////////////////////////////////////////////////////////
// Free-group subsets
////////////////////////////////////////////////////////////////////////

trees::FiniteTree ab_tree(const NodeSet& s) {
  return trees::FiniteTree("ab", s);
}

Result suite_itsahom(const Config& c) {
  Tally t(c);
  auto  shapes = all_trees("ab", 3, 6);
  std::vector<std::pair<std::size_t, std::string>> cases;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (const auto& w : shapes[i]) {
      if (!w.empty() && w.size() <= 2) {
        cases.emplace_back(i, w);
      }
    }
  }
  t.run("trees", cases.size(), [&](std::size_t i) {
    const auto& [k, w] = cases[i];
    auto res           = subset::itsahom_verify(ab_tree(shapes[k]), w);
    return Outcome{res.equal, "T=" + show(shapes[k]) + " w=" + w, shapes[k].size()};
  });
  t.details()["trees"] = shapes.size();
  return t.finish("itsahom");
}

Result suite_outline(const Config& c) {
  Tally                    t(c);
  std::vector<std::uint8_t> premise(1000, 0);
  t.run("random-pairs", count(c, 1000), [&](std::size_t i) {
    auto    rng = instance_rng(c.seed, "outline", i);
    NodeSet a   = random_tree(rng, "ab", 3);
    NodeSet b;
    switch (i % 3) {
      case 0:
        b = a;
        break;
      case 1: {
        b = a;
        std::vector<std::string> nodes(a.begin(), a.end());
        for (std::size_t extra = uniform(rng, 1, 2); extra > 0; --extra) {
          const auto& s = nodes[uniform(rng, 0, nodes.size() - 1)];
          b.insert(s + (coin(rng) ? 'a' : 'b'));
        }
        break;
      }
      default:
        b = random_tree(rng, "ab", 3);
    }
    if (coin(rng)) {
      std::swap(a, b);
    }
    auto sa = subset::outline_S(ab_tree(a)).nodes();
    auto sb = subset::outline_S(ab_tree(b)).nodes();
    bool included = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    premise[i]    = included ? 1 : 0;
    return Outcome{!included || a == b, "T=" + show(a) + " T'=" + show(b), a.size() + b.size()};
  });
  t.details()["premise_held"] = std::count(premise.begin(), premise.end(), 1);
  return t.finish("outline");
}

template <typename Rng>
WordSet random_group_set(Rng& rng, std::size_t max_size, std::size_t max_len) {
  std::vector<Letter> ab{Letter::of("a"), Letter::of("a", -1), Letter::of("b"),
                         Letter::of("b", -1)};
  WordSet out;
  std::size_t n = uniform(rng, 1, max_size);
  while (out.size() < n) {
    out.insert(random_reduced(rng, ab, uniform(rng, 0, max_len)));
  }
  return out;
}

Result suite_translate(const Config& c) {
  Tally t(c);
  t.run("embedding-transport", count(c, 100), [&](std::size_t i) {
    auto    rng = instance_rng(c.seed, "translate", i);
    WordSet b   = random_group_set(rng, 3, 2);
    WordSet a   = random_group_set(rng, 3, 2);
    if (coin(rng)) {
      // Build A as an intersection of translates of B.
      std::vector<Word> bs(b.begin(), b.end());
      Word    g0 = multiply(bs[0], invert(bs[uniform(rng, 0, bs.size() - 1)]));
      WordSet acc = subset::translate(g0, b);
      Word    g1 = multiply(bs[uniform(rng, 0, bs.size() - 1)], invert(bs[0]));
      WordSet next = subset::translate(multiply(g0, g1), b), meet;
      std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                            std::inserter(meet, meet.end()));
      a = meet.empty() ? acc : meet;
    }
    auto direct = subset::translate_qo_leq(a, b);
    if (direct && !subset::translate_witness_holds(a, b, *direct)) {
      return Outcome{false, "witness fails on A=" + show(a) + " B=" + show(b), a.size()};
    }
    WordSet ea, eb;
    for (const auto& w : a) {
      ea.insert(subset::embed_finf_to_f2(w));
    }
    for (const auto& w : b) {
      eb.insert(subset::embed_finf_to_f2(w));
    }
    auto moved = subset::translate_qo_leq(ea, eb);
    return Outcome{direct.has_value() == moved.has_value(), "A=" + show(a) + " B=" + show(b),
                   a.size() + b.size()};
  });
  return t.finish("translate");
}

Result suite_kmap(const Config& c) {
  Tally       t(c);
  std::vector<Word> const ab{Word::parse("a"), Word::parse("b")};
  std::vector<std::size_t> universe_sizes(2 * count(c, 100), 0);
  t.run("intersection", count(c, 100), [&](std::size_t i) {
    auto                rng = instance_rng(c.seed, "kmap-meet", i);
    subset::FreeProduct fp(i % 2 == 0 ? 7 : 0);
    WordSet             a = random_group_set(rng, 3, 2), b = random_group_set(rng, 3, 2), meet;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(meet, meet.end()));
    WordSet seeds(a);
    seeds.insert(b.begin(), b.end());
    auto universe     = subset::K_universe(seeds, ab, fp);
    universe_sizes[i] = universe.size();
    for (const auto& w : universe) {
      bool lhs = subset::K_member(w, a, fp) && subset::K_member(w, b, fp);
      bool rhs = subset::K_member(w, meet, fp);
      if (lhs != rhs) {
        return Outcome{false,
                       "order " + std::to_string(fp.order()) + " A=" + show(a) + " B=" + show(b)
                           + " w=" + subset::fp_str(w),
                       w.size()};
      }
    }
    return Outcome{true, "", 0};
  });
  t.run("conjugation", count(c, 100), [&](std::size_t i) {
    auto                rng = instance_rng(c.seed, "kmap-conj", i);
    subset::FreeProduct fp(i % 2 == 0 ? 7 : 0);
    WordSet             a = random_group_set(rng, 3, 2);
    Word                g = *random_group_set(rng, 1, 2).begin();
    if (g.empty()) {
      g = Word::parse("ab");
    }
    WordSet ga = subset::translate(g, a), seeds(a);
    seeds.insert(ga.begin(), ga.end());
    auto universe          = subset::K_universe(seeds, ab, fp);
    universe_sizes[count(c, 100) + i] = universe.size();
    for (const auto& w : universe) {
      bool lhs = subset::K_member(w, ga, fp);
      bool rhs = subset::K_member(fp.conjugate(invert(g), w), a, fp);
      if (lhs != rhs) {
        return Outcome{false,
                       "order " + std::to_string(fp.order()) + " A=" + show(a) + " g=" + g.str()
                           + " w=" + subset::fp_str(w),
                       w.size()};
      }
    }
    return Outcome{true, "", 0};
  });
  t.details()["universe_words"] =
      std::accumulate(universe_sizes.begin(), universe_sizes.end(), std::size_t{0});
  return t.finish("kmap");
}

////////////////////////////////////////////////////////////////////////
// Words over M₂ and trees
////////////////////////////////////////////////////////////////////////

Word m2_from_bits(const std::string& s) {
  return trees::unhat(s);
}

Result suite_encoding_chain(const Config& c) {
  Tally                    t(c);
  std::vector<std::uint8_t> positive(500, 0);
  auto                     pool = trees::strings_up_to("01", 3);
  t.run("random-pairs", count(c, 500), [&](std::size_t i) {
    auto    rng = instance_rng(c.seed, "encoding-chain", i);
    auto    pick = [&] {
      std::set<Word> out;
      std::size_t    n = uniform(rng, 1, 4);
      while (out.size() < n) {
        out.insert(m2_from_bits(pool[uniform(rng, 0, pool.size() - 1)]));
      }
      return out;
    };
    WordSet b = pick(), a = pick();
    if (coin(rng)) {
      std::vector<Word> bs(b.begin(), b.end());
      const Word&       y = bs[uniform(rng, 0, bs.size() - 1)];
      Word              m = y.suffix_from(uniform(rng, 0, y.size()));
      a.clear();
      for (const auto& z : b) {
        if (z.size() >= m.size() && z.suffix_from(z.size() - m.size()) == m) {
          a.insert(z.prefix(z.size() - m.size()));
        }
      }
    }
    auto to_bits = [](const WordSet& s) {
      NodeSet out;
      for (const auto& w : s) {
        out.insert(trees::hat(w));
      }
      return out;
    };
    WordSet const ba = shift::bar_set(a), bb = shift::bar_set(b);
    auto          s1 = shift::suffix_qo_leq(a, b);
    auto          s2 = shift::prefix_qo_leq(ba, bb);
    auto s3 = trees::mbt_leq(trees::encode_t(to_bits(ba)), trees::encode_t(to_bits(bb)));
    auto s4 = trees::c_stage_leq(to_bits(ba), to_bits(bb));
    bool agree = s1.has_value() == s2.has_value() && s2.has_value() == s3.has_value()
                 && s3.has_value() == s4.has_value();
    if (s1 && !shift::prefix_witness_holds(ba, bb, shift::bar_map(*s1))) {
      agree = false;
    }
    positive[i] = s1 ? 1 : 0;
    return Outcome{agree,
                   "A=" + show(a) + " B=" + show(b) + " suffix=" + (s1 ? "yes" : "no")
                       + " prefix=" + (s2 ? "yes" : "no") + " marks=" + (s3 ? "yes" : "no")
                       + " C=" + (s4 ? "yes" : "no"),
                   a.size() + b.size()};
  });
  t.details()["comparable"] = std::count(positive.begin(), positive.end(), 1);
  return t.finish("encoding-chain");
}

Result suite_star(const Config& c) {
  Tally t(c);
  std::vector<Word> gs{Word()};
  {
    std::vector<Word> level{Word()};
    for (int len = 1; len <= 3; ++len) {
      std::vector<Word> next;
      for (const auto& w : level) {
        for (unsigned long n = 1; n <= 3; ++n) {
          next.push_back(concat(w, shift::momega_generator(n)));
        }
      }
      gs.insert(gs.end(), next.begin(), next.end());
      level.swap(next);
    }
  }
  std::vector<Word> hs;
  for (const auto& s : trees::strings_up_to("01", 8)) {
    hs.push_back(trees::unhat(s));
  }
  t.run("equivariance", count(c, 100), [&](std::size_t i) {
    auto         rng = instance_rng(c.seed, "star", i);
    shift::Bitmap p;
    for (std::size_t n = uniform(rng, 1, 4); n > 0; --n) {
      Word w;
      for (std::size_t len = uniform(rng, 0, 3); len > 0; --len) {
        w = concat(w, shift::momega_generator(uniform(rng, 1, 3)));
      }
      p.insert(w);
    }
    shift::Evaluator p_star = [&p](const Word& h) { return shift::star_eval(p, h); };
    for (const auto& g : gs) {
      // (g·p)(s) = p(s g), as a finite support.
      shift::Bitmap gp;
      for (const auto& q : p) {
        if (q.size() >= g.size()
            && std::equal(g.begin(), g.end(), q.end() - static_cast<long>(g.size()))) {
          gp.insert(q.prefix(q.size() - g.size()));
        }
      }
      Word const eg = shift::embed_momega(g);
      for (const auto& h : hs) {
        if (shift::star_eval(gp, h) != shift::shift_act_eval(eg, p_star, h)) {
          return Outcome{false,
                         "p=" + show(p) + " g=" + g.str() + " h=" + h.str(), g.size() + h.size()};
        }
      }
    }
    return Outcome{true, "", 0};
  });
  std::vector<Outcome> fixed;
  for (const auto& p : {shift::Bitmap{}, shift::Bitmap{Word::parse("x1", Alphabet::monoid)}}) {
    fixed.push_back({shift::star_eval(p, shift::m2_word("b")), "p*(b) != 1 for p=" + show(p), 0});
  }
  t.record("fixed", fixed);
  return t.finish("star");
}

////////////////////////////////////////////////////////////////////////
// Quasi-orders
////////////////////////////////////////////////////////////////////////

std::string show(const qo::FiniteRelation& r) {
  return io::relation_to_json(r).dump();
}

Result suite_fm(const Config& c) {
  Tally                          t(c);
  std::vector<qo::FiniteRelation> all;
  json                           counts = json::array();
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n * n)); ++mask) {
      qo::FiniteRelation r(n);
      for (std::size_t k = 0; k < n * n; ++k) {
        if (mask >> k & 1U) {
          r.set(k / n, k % n);
        }
      }
      if (qo::is_quasi_order(r)) {
        all.push_back(r);
        ++count;
      }
    }
    counts.push_back(count);
  }
  auto round_trip = [](const qo::FiniteRelation& q) {
    auto back = qo::orbit_qo(qo::fm_decompose(q));
    std::vector<std::size_t> id(q.size());
    std::iota(id.begin(), id.end(), 0);
    bool ok = back == q && qo::verify_reduction(id, q, back).holds;
    return Outcome{ok, "Q=" + show(q), q.size()};
  };
  t.run("exhaustive", all.size(), [&](std::size_t i) { return round_trip(all[i]); });
  t.run("random-5", count(c, 200), [&](std::size_t i) {
    auto               rng = instance_rng(c.seed, "fm", i);
    qo::FiniteRelation q(5);
    double             density = 0.1 + 0.3 * static_cast<double>(i % 4) / 3.0;
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = 0; b < 5; ++b) {
        if (a == b || coin(rng, density)) {
          q.set(a, b);
        }
      }
    }
    for (std::size_t k = 0; k < 5; ++k) {
      for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = 0; b < 5; ++b) {
          if (q.holds(a, k) && q.holds(k, b)) {
            q.set(a, b);
          }
        }
      }
    }
    return round_trip(q);
  });
  t.details()["quasi_orders_by_size"] = counts;
  return t.finish("fm");
}

Result suite_symmetrize(const Config& c) {
  Tally t(c);
  t.run("random", count(c, 100), [&](std::size_t i) {
    auto        rng = instance_rng(c.seed, "symmetrize", i);
    std::size_t n   = uniform(rng, 4, 9);
    // Classes of size ≥ 2: cut a shuffled list into runs of 2 or more.
    std::vector<std::size_t> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::size_t> cls(n);
    std::size_t              pos = 0, label = 0;
    while (pos < n) {
      std::size_t len = n - pos <= 3 ? n - pos : uniform(rng, 2, n - pos - 2);
      for (std::size_t k = 0; k < len; ++k) {
        cls[pts[pos + k]] = label;
      }
      pos += len;
      ++label;
    }
    qo::FiniteRelation e(n), ord(n);
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        e.set(a, b, cls[a] == cls[b]);
        ord.set(a, b, rank[a] <= rank[b]);
      }
    }
    auto        meet  = qo::meet_with_order(e, ord);
    std::size_t extra = uniform(rng, 2, 3);
    auto        uni   = qo::disjoint_union(meet, qo::FiniteRelation::full(extra));
    bool ok = qo::is_quasi_order(meet) && qo::is_antisymmetric(meet)
              && qo::symmetrize_EQ(meet) == qo::FiniteRelation::identity(n)
              && qo::symmetrize_EQ(uni)
                     == qo::disjoint_union(qo::FiniteRelation::identity(n),
                                           qo::FiniteRelation::full(extra));
    return Outcome{ok, "E=" + show(e) + " order=" + show(ord), n};
  });
  return t.finish("symmetrize");
}

using SuiteFn = Result (*)(const Config&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"cprime-graph", suite_cprime_graph},
      {"cprime-tree", suite_cprime_tree},
      {"overlap", suite_overlap},
      {"lineup", suite_lineup},
      {"functioncyclic", suite_functioncyclic},
      {"cyclesubword", suite_cyclesubword},
      {"composed", suite_composed},
      {"itsahom", suite_itsahom},
      {"outline", suite_outline},
      {"encoding-chain", suite_encoding_chain},
      {"star", suite_star},
      {"fm", suite_fm},
      {"orders", suite_orders},
      {"roundtrip", suite_roundtrip},
      {"relmap", suite_relmap},
      {"surjprobe", suite_surjprobe},
      {"symmetrize", suite_symmetrize},
      {"kmap", suite_kmap},
      {"translate", suite_translate},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

Result run_suite(std::string_view name, const Config& config) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      return fn(config);
    }
  }
  throw MalformedInput("unknown suite '" + std::string(name) + "'");
}

}  // namespace cbqo::suites
