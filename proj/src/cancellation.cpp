#include "cbqo/cancellation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>

#include "cbqo/parallel.hpp"

namespace cbqo::cancel {

////////////////////////////////////////////////////////////////////////
// Rationals and hashes
////////////////////////////////////////////////////////////////////////

Rational Rational::parse(std::string_view text) {
  auto read = [&](std::string_view part, long& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("'" + std::string(text) + "' is not a rational P/Q");
    }
  };
  Rational r;
  auto     slash = text.find('/');
  read(text.substr(0, slash), r.num);
  if (slash != std::string_view::npos) {
    read(text.substr(slash + 1), r.den);
  }
  if (r.den <= 0 || r.num < 0) {
    throw ParseError("'" + std::string(text) + "' must have P >= 0 and Q > 0");
  }
  return r;
}

std::string Rational::str() const {
  long g = std::gcd(num, den);
  if (g == 0) {
    g = 1;
  }
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

std::string fnv_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string relator_hash(const std::vector<Word>& relators) {
  std::string all;
  for (const auto& r : relators) {
    all += r.str();
    all += ';';
  }
  return fnv_hex(all);
}

////////////////////////////////////////////////////////////////////////
// Symmetrized sets
////////////////////////////////////////////////////////////////////////

struct SymmetrizedSet::Index {
  std::vector<SuffixAutomaton>            sams;
  std::vector<std::vector<std::uint32_t>> doubled;
  std::vector<std::size_t>                lengths;
  std::size_t                             min_length = 0;
};

struct SymmetrizedSet::IndexHolder {
  std::once_flag                  once;
  std::unique_ptr<const Index>    index;
};

SymmetrizedSet SymmetrizedSet::from_relators(const std::vector<Word>& relators) {
  std::set<CyclicWord> classes;
  for (const auto& r : relators) {
    Word fr = free_reduce(r);
    if (fr.empty()) {
      throw DegenerateInput("relator '" + r.str() + "' is trivial");
    }
    CyclicWord c = cyclic_word(fr);
    classes.insert(c.inverse());
    classes.insert(std::move(c));
  }
  SymmetrizedSet s;
  s.classes_.assign(classes.begin(), classes.end());
  s.index_ = std::make_shared<IndexHolder>();
  return s;
}

std::vector<Word> SymmetrizedSet::elements() const {
  std::vector<Word> out;
  for (const auto& c : classes_) {
    std::size_t p = primitive_root(c.representative()).root.size();
    for (std::size_t k = 0; k < p; ++k) {
      out.push_back(rotate(c.representative(), k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SymmetrizedSet::size() const {
  std::size_t n = 0;
  for (const auto& c : classes_) {
    n += primitive_root(c.representative()).root.size();
  }
  return n;
}

const SymmetrizedSet::Index& SymmetrizedSet::index() const {
  if (!index_) {
    throw PreconditionError("symmetrized set was not built from relators");
  }
  std::call_once(index_->once, [this] {
    auto idx        = std::make_unique<Index>();
    idx->min_length = static_cast<std::size_t>(-1);
    for (const auto& c : classes_) {
      idx->doubled.push_back(doubled_codes(c.representative()));
      idx->sams.emplace_back(idx->doubled.back());
      idx->lengths.push_back(c.size());
      idx->min_length = std::min(idx->min_length, c.size());
    }
    index_->index = std::move(idx);
  });
  return *index_->index;
}

////////////////////////////////////////////////////////////////////////
// Pieces
////////////////////////////////////////////////////////////////////////

namespace {

  // piece.length / min_len as a fraction, compared by cross multiplication.
  struct Ratio {
    std::size_t piece   = 0;
    std::size_t min_len = 1;
  };
  bool greater(const Ratio& a, const Ratio& b) {
    return a.piece * b.min_len > b.piece * a.min_len;
  }

  struct ClassBest {
    Piece piece;
    Ratio ratio;
  };

  // For class i: the longest piece and the largest ratio over the pairs
  // (i, i) and (i, j) with j > i, ties going to the smaller j.
  void scan_class(const std::vector<CyclicWord>& cls, std::size_t i, ClassBest& longest,
                  ClassBest& worst) {
    auto consider = [&](const Piece& p, std::size_t min_len) {
      Ratio r{p.length, min_len};
      if (p.length > longest.piece.length) {
        longest = {p, r};
      }
      if (greater(r, worst.ratio)) {
        worst = {p, r};
      }
    };
    longest = worst = {{0, i, i, 0, 0}, {0, cls[i].size()}};
    auto self       = self_overlap(cls[i]);
    consider({self.length, i, i, self.offset_a, self.offset_b}, cls[i].size());
    if (i + 1 == cls.size()) {
      return;
    }
    CyclicOverlapIndex index(cls[i]);
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      auto ov = index.against(cls[j]);
      consider({ov.length, i, j, ov.offset_a, ov.offset_b}, std::min(cls[i].size(), cls[j].size()));
    }
  }

  std::vector<std::pair<ClassBest, ClassBest>> scan_all(const SymmetrizedSet& r, unsigned jobs) {
    const auto&                                  cls = r.classes();
    std::vector<std::pair<ClassBest, ClassBest>> out(cls.size());
    parallel_for(cls.size(), jobs,
                 [&](std::size_t i) { scan_class(cls, i, out[i].first, out[i].second); });
    return out;
  }

}  // namespace

Piece max_piece(const SymmetrizedSet& r, unsigned jobs) {
  Piece best;
  for (const auto& [longest, worst] : scan_all(r, jobs)) {
    if (longest.piece.length > best.length) {
      best = longest.piece;
    }
  }
  return best;
}

std::size_t max_piece_scan(const SymmetrizedSet& r) {
  auto        all  = r.elements();
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    best = std::max(best, max_common_prefix(all[i - 1], all[i]));
  }
  return best;
}

CPrimeResult check_cprime(const SymmetrizedSet& r, Rational lambda, unsigned jobs) {
  CPrimeResult out;
  Ratio        worst{0, 1};
  bool         any = false;
  for (const auto& [longest, w] : scan_all(r, jobs)) {
    if (!any || greater(w.ratio, worst)) {
      worst     = w.ratio;
      out.worst = w.piece;
      any       = true;
    }
  }
  if (!any) {
    return out;
  }
  const auto& cls = r.classes();
  out.min_length  = worst.min_len;
  out.element_a   = rotate(cls[out.worst.class_a].representative(), out.worst.offset_a);
  out.element_b   = rotate(cls[out.worst.class_b].representative(), out.worst.offset_b);
  out.piece       = out.element_a.prefix(out.worst.length);
  // |piece| < λ·min(|r₁|, |r₂|) for the worst pair settles every pair.
  out.holds = static_cast<long>(worst.piece) * lambda.den
              < lambda.num * static_cast<long>(worst.min_len);
  return out;
}

CPrimeResult certify(SymmetrizedSet& r, Rational lambda, unsigned jobs) {
  auto result = check_cprime(r, lambda, jobs);
  if (result.holds) {
    r.set_certified(lambda);
  }
  return result;
}

////////////////////////////////////////////////////////////////////////
// Dehn's algorithm
////////////////////////////////////////////////////////////////////////

std::optional<Word> dehn_step(const Word& input, const SymmetrizedSet& r) {
  Word const  w     = free_reduce(input);
  const auto& idx   = r.index();
  const auto& cls   = r.classes();
  auto        codes = w.codes();
  std::size_t const n = codes.size();
  for (std::size_t i = 0; i < n && 2 * (n - i) > idx.min_length; ++i) {
    std::span<const std::uint32_t> tail(codes.data() + i, n - i);
    std::size_t                    best = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      std::size_t len = std::min(idx.sams[k].longest_prefix_match(tail), idx.lengths[k]);
      if (2 * len > idx.lengths[k]) {
        best = std::max(best, len);
      }
    }
    if (best == 0) {
      continue;
    }
    // Least element r = s·t over all classes with |s| > |r|/2.
    std::optional<Word> chosen;
    auto                s = tail.first(best);
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (2 * best <= idx.lengths[k]) {
        continue;
      }
      const auto& d = idx.doubled[k];
      for (auto it = std::search(d.begin(), d.end(), s.begin(), s.end()); it != d.end();
           it      = std::search(it + 1, d.end(), s.begin(), s.end())) {
        auto p = static_cast<std::size_t>(it - d.begin());
        if (p >= idx.lengths[k]) {
          break;
        }
        Word rot = rotate(cls[k].representative(), p);
        if (!chosen || rot < *chosen) {
          chosen = std::move(rot);
        }
      }
    }
    Word replaced = concat(concat(w.prefix(i), invert(chosen->suffix_from(best))),
                           w.suffix_from(i + best));
    return free_reduce(replaced);
  }
  return std::nullopt;
}

namespace {

  void require_certified(const SymmetrizedSet& r) {
    const auto& c = r.certified();
    if (!c || Rational{1, 6} < *c) {
      throw PreconditionError(
          "Dehn's algorithm needs a presentation certified C'(lambda) with lambda <= 1/6; "
          "run check-cprime first");
    }
  }

}  // namespace

std::vector<Word> dehn_trace(const Word& w, const SymmetrizedSet& r) {
  require_certified(r);
  std::vector<Word> trace{free_reduce(w)};
  while (auto next = dehn_step(trace.back(), r)) {
    trace.push_back(std::move(*next));
  }
  return trace;
}

bool dehn_is_identity(const Word& w, const SymmetrizedSet& r) {
  require_certified(r);
  Word cur = free_reduce(w);
  while (auto next = dehn_step(cur, r)) {
    cur = std::move(*next);
  }
  return cur.empty();
}

std::optional<std::size_t> word_order_bounded(const Word& w, const SymmetrizedSet& r,
                                              std::size_t max_order) {
  require_certified(r);
  Word const base = free_reduce(w);
  Word       acc;
  for (std::size_t n = 1; n <= max_order; ++n) {
    acc = concat(acc, base);
    if (dehn_is_identity(acc, r)) {
      return n;
    }
  }
  return std::nullopt;
}

std::optional<Torsion> torsion_classify(const Word& w, const SymmetrizedSet& r) {
  Word const fr = free_reduce(w);
  if (fr.empty()) {
    return std::nullopt;
  }
  Word const core = cyclic_reduce(fr).core.representative();
  Word const u    = cyclic_word(primitive_root(core).root).representative();
  for (const auto& c : r.classes()) {
    auto pr = primitive_root(c.representative());
    if (pr.root == u) {
      return Torsion{pr.root, c.representative(), pr.exponent};
    }
  }
  return std::nullopt;
}

////////////////////////////////////////////////////////////////////////
// Substitutions
////////////////////////////////////////////////////////////////////////

SubstitutionMap f0() {
  return {Word::parse("xxxxxy"), Word::parse("yyyyyx")};
}

SubstitutionMap f1() {
  return {Word::parse("xxyxyx"), Word::parse("yyxyxy")};
}

Word subst_apply(const SubstitutionMap& m, const Word& word) {
  std::vector<Letter> out;
  for (Letter l : word) {
    const Word* image = nullptr;
    if (l.name() == "x") {
      image = &m.x_image;
    } else if (l.name() == "y") {
      image = &m.y_image;
    } else {
      throw MalformedInput("substitutions act on words over {x, y}, found " + l.str());
    }
    if (l.sign() > 0) {
      out.insert(out.end(), image->begin(), image->end());
    } else {
      for (auto it = image->end(); it != image->begin();) {
        out.push_back((*--it).inverse());
      }
    }
  }
  return Word(std::move(out));
}

SubstitutionMap f_w(std::string_view w) {
  SubstitutionMap m{Word::parse("x"), Word::parse("y")};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it != '0' && *it != '1') {
      throw MalformedInput("'" + std::string(w) + "' is not a binary index string");
    }
    SubstitutionMap const outer = *it == '0' ? f0() : f1();
    m = {subst_apply(outer, m.x_image), subst_apply(outer, m.y_image)};
  }
  return m;
}

Word subst_apply(std::string_view w, const Word& word) {
  return subst_apply(f_w(w), word);
}

std::optional<Word> block_parse(const Word& word, std::string_view u) {
  auto const m = f_w(u);
  Letter const x = Letter::of("x"), y = Letter::of("y");
  std::pair<Letter, Word> const blocks[] = {
      {x, m.x_image}, {x.inverse(), invert(m.x_image)},
      {y, m.y_image}, {y.inverse(), invert(m.y_image)}};
  std::vector<Letter> out;
  std::size_t         i = 0;
  while (i < word.size()) {
    const std::pair<Letter, Word>* hit = nullptr;
    for (const auto& b : blocks) {
      if (b.second.front() == word[i]) {
        hit = &b;
        break;
      }
    }
    if (hit == nullptr || i + hit->second.size() > word.size()
        || !std::equal(hit->second.begin(), hit->second.end(), word.begin() + i)) {
      return std::nullopt;
    }
    out.push_back(hit->first);
    i += hit->second.size();
  }
  return Word(std::move(out));
}

////////////////////////////////////////////////////////////////////////
// Graph groups
////////////////////////////////////////////////////////////////////////

namespace {

  Letter vertex(std::size_t i) {
    return Letter::of("v" + std::to_string(i));
  }

  std::optional<std::size_t> vertex_index(Letter l) {
    const auto& n = l.name();
    if (l.sign() < 0 || n.size() < 2 || n[0] != 'v' || (n[1] == '0' && n.size() > 2)) {
      return std::nullopt;
    }
    std::size_t i = 0;
    auto [ptr, ec] = std::from_chars(n.data() + 1, n.data() + n.size(), i);
    if (ec != std::errc() || ptr != n.data() + n.size()) {
      return std::nullopt;
    }
    return i;
  }

  std::string tree_key(const trees::NodeSet& t) {
    std::vector<std::string> nodes(t.begin(), t.end());
    std::stable_sort(nodes.begin(), nodes.end(), ShortlexLess{});
    std::string key = "tree:";
    for (const auto& s : nodes) {
      key += (s.empty() ? std::string("-") : s) + ",";
    }
    return key;
  }

}  // namespace

Graph Graph::make(std::size_t vertices,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g;
  g.vertices = vertices;
  for (auto [i, j] : edges) {
    if (i >= vertices || j >= vertices) {
      throw MalformedInput("edge (" + std::to_string(i) + "," + std::to_string(j)
                           + ") names a vertex outside 0.." + std::to_string(vertices) + "-1");
    }
    if (i == j) {
      throw MalformedInput("loop at vertex " + std::to_string(i) + " is not allowed");
    }
    g.edges.insert(std::minmax(i, j));
  }
  return g;
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  return edges.count(std::minmax(i, j)) != 0;
}

Presentation build_graph_group(const Graph& g) {
  if (g.vertices == 0) {
    throw MalformedInput("a graph group needs at least one vertex");
  }
  Presentation p;
  std::string  key = "graph:" + std::to_string(g.vertices) + ";";
  for (std::size_t i = 0; i < g.vertices; ++i) {
    p.generators.push_back(vertex(i).name());
    p.relators.push_back(power(Word::letter(vertex(i)), 7));
  }
  for (std::size_t i = 0; i < g.vertices; ++i) {
    for (std::size_t j = i + 1; j < g.vertices; ++j) {
      bool edge = g.has_edge(i, j);
      p.relators.push_back(power(Word({vertex(i), vertex(j)}), edge ? 11 : 13));
      if (edge) {
        key += std::to_string(i) + "-" + std::to_string(j) + ",";
      }
    }
  }
  p.meta.kind         = "graph-group";
  p.meta.source_hash  = fnv_hex(key);
  p.meta.relator_hash = relator_hash(p.relators);
  return p;
}

Graph decode_graph(const Presentation& p) {
  Graph g;
  g.vertices = p.generators.size();
  for (std::size_t i = 0; i < g.vertices; ++i) {
    if (p.generators[i] != vertex(i).name()) {
      throw MalformedInput("graph-group generators must be v0, v1, ...; found '"
                           + p.generators[i] + "'");
    }
  }
  std::vector<bool>                             has_power(g.vertices, false);
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  for (const auto& r : p.relators) {
    if (r.empty()) {
      throw MalformedInput("empty relator");
    }
    auto pr = primitive_root(r);
    auto bad = [&] { return MalformedInput("relator '" + r.str() + "' is not a graph relator"); };
    if (pr.root.size() == 1) {
      auto i = vertex_index(pr.root[0]);
      if (!i || *i >= g.vertices || pr.exponent != 7) {
        throw bad();
      }
      has_power[*i] = true;
    } else if (pr.root.size() == 2) {
      auto i = vertex_index(pr.root[0]);
      auto j = vertex_index(pr.root[1]);
      if (!i || !j || *i >= *j || *j >= g.vertices
          || (pr.exponent != 11 && pr.exponent != 13)) {
        throw bad();
      }
      if (!seen_pairs.insert({*i, *j}).second) {
        throw MalformedInput("pair (" + std::to_string(*i) + "," + std::to_string(*j)
                             + ") has two relators");
      }
      if (pr.exponent == 11) {
        g.edges.insert({*i, *j});
      }
    } else {
      throw bad();
    }
  }
  if (std::find(has_power.begin(), has_power.end(), false) != has_power.end()
      || seen_pairs.size() != g.vertices * (g.vertices - 1) / 2) {
    throw MalformedInput("presentation lacks some vertex or pair relator");
  }
  return g;
}

////////////////////////////////////////////////////////////////////////
// Tree groups
////////////////////////////////////////////////////////////////////////

namespace {

  void require_tree_set(const trees::NodeSet& t) {
    for (const auto& s : t) {
      if (s.find_first_not_of("01") != std::string::npos) {
        throw MalformedInput("node '" + s + "' is not a binary string");
      }
    }
    if (auto p = trees::missing_prefix(t)) {
      throw MalformedInput("tree is not prefix-closed: missing prefix '"
                           + (p->empty() ? std::string("-") : *p) + "'");
    }
  }

}  // namespace

Presentation build_tree_group(const trees::NodeSet& t, std::size_t d) {
  if (d > max_tree_depth) {
    throw BoundExceeded("tree-group depth " + std::to_string(d) + " exceeds the limit "
                        + std::to_string(max_tree_depth));
  }
  require_tree_set(t);
  Presentation p;
  p.generators = {"x", "y"};
  for (const auto& w : trees::strings_up_to("01", d)) {
    bool in = t.count(w) != 0;
    auto m  = f_w(w);
    p.relators.push_back(power(m.x_image, in ? 59 : 67));
    p.relators.push_back(power(m.y_image, in ? 61 : 71));
  }
  p.meta.kind         = "tree-group";
  p.meta.depth        = d;
  p.meta.source_hash  = fnv_hex(tree_key(t));
  p.meta.relator_hash = relator_hash(p.relators);
  return p;
}

trees::NodeSet decode_tree(const Presentation& p) {
  // membership[w] = (x relator says in, y relator says in); -1 = absent.
  std::map<std::string, std::pair<int, int>> membership;
  std::size_t                                deepest = 0;
  for (const auto& r : p.relators) {
    auto bad = [&](const std::string& why) {
      return MalformedInput("relator '" + r.str() + "' " + why);
    };
    if (r.empty()) {
      throw bad("is empty");
    }
    auto        pr  = primitive_root(r);
    std::size_t len = pr.root.size(), k = 0;
    while (len % 6 == 0 && len > 1) {
      len /= 6;
      ++k;
    }
    if (len != 1 || k > max_tree_depth) {
      throw bad("is not a power of some f_w(x) or f_w(y)");
    }
    bool matched = false;
    for (const auto& w : trees::strings_up_to("01", k)) {
      if (w.size() != k) {
        continue;
      }
      auto m   = f_w(w);
      auto& slot = membership.try_emplace(w, -1, -1).first->second;
      if (pr.root == m.x_image) {
        if (pr.exponent != 59 && pr.exponent != 67) {
          throw bad("has an exponent other than 59 or 67");
        }
        slot.first = pr.exponent == 59 ? 1 : 0;
      } else if (pr.root == m.y_image) {
        if (pr.exponent != 61 && pr.exponent != 71) {
          throw bad("has an exponent other than 61 or 71");
        }
        slot.second = pr.exponent == 61 ? 1 : 0;
      } else {
        continue;
      }
      matched = true;
      deepest = std::max(deepest, k);
      break;
    }
    if (!matched) {
      throw bad("is not a power of some f_w(x) or f_w(y)");
    }
  }
  trees::NodeSet out;
  for (const auto& w : trees::strings_up_to("01", deepest)) {
    auto it = membership.find(w);
    if (it == membership.end() || it->second.first < 0 || it->second.second < 0) {
      throw MalformedInput("no relator pair for index '" + (w.empty() ? std::string("-") : w)
                           + "'");
    }
    if (it->second.first != it->second.second) {
      throw MalformedInput("x and y relators disagree on index '"
                           + (w.empty() ? std::string("-") : w) + "'");
    }
    if (it->second.first == 1) {
      out.insert(w);
    }
  }
  require_tree_set(out);
  return out;
}

MappingCheck verify_relator_mapping(const trees::NodeSet& t,
                                    const trees::NodeSet& t_prime,
                                    std::string_view      w,
                                    std::size_t           d) {
  if (w.size() > d || w.find_first_not_of("01") != std::string_view::npos) {
    throw PreconditionError("index string must be binary with |w| <= d");
  }
  std::size_t const e  = d - w.size();
  auto const        vs = trees::strings_up_to("01", e);
  MappingCheck      out;
  for (const auto& v : vs) {
    bool lhs = t.count(v) != 0;
    bool rhs = t_prime.count(std::string(w) + v) != 0;
    if (lhs != rhs) {
      out.violating_v = v;
      break;
    }
  }
  out.combinatorial = !out.violating_v;

  auto const     source = build_tree_group(t, e);
  auto const     target = build_tree_group(t_prime, d);
  std::set<Word> targets(target.relators.begin(), target.relators.end());
  auto const     m = f_w(w);
  for (std::size_t k = 0; k < source.relators.size(); ++k) {
    if (targets.count(subst_apply(m, source.relators[k])) == 0) {
      out.violating_v_image = vs[k / 2];
      break;
    }
  }
  out.relator_image = !out.violating_v_image;
  return out;
}

GraphHomCheck verify_graph_hom(const Graph& s, const Graph& t, const std::vector<std::size_t>& f) {
  if (f.size() != s.vertices) {
    throw MalformedInput("vertex map must have one entry per source vertex");
  }
  for (auto v : f) {
    if (v >= t.vertices) {
      throw MalformedInput("vertex map sends a vertex outside the target graph");
    }
  }
  GraphHomCheck out;
  std::set<std::size_t> image(f.begin(), f.end());
  out.combinatorial = image.size() == f.size();
  for (std::size_t i = 0; i < s.vertices && out.combinatorial; ++i) {
    for (std::size_t j = i + 1; j < s.vertices; ++j) {
      if (s.has_edge(i, j) != t.has_edge(f[i], f[j])) {
        out.combinatorial = false;
        break;
      }
    }
  }

  auto const           ps = build_graph_group(s);
  auto const           pt = build_graph_group(t);
  std::set<CyclicWord> targets;
  for (const auto& r : pt.relators) {
    targets.insert(cyclic_word(r));
  }
  out.relator_image = true;
  for (const auto& r : ps.relators) {
    std::vector<Letter> mapped;
    for (Letter l : r) {
      mapped.push_back(vertex(f[*vertex_index(l)]));
    }
    Word image_word = free_reduce(Word(std::move(mapped)));
    if (image_word.empty() || targets.count(cyclic_word(image_word)) == 0) {
      out.relator_image = false;
      break;
    }
  }
  return out;
}

std::optional<Word> surjectivity_probe(std::string_view w, const SymmetrizedSet& r,
                                       std::size_t bound) {
  require_certified(r);
  auto const   m     = f_w(w);
  Word const   x_inv = Word::parse("X");
  Letter const letters[] = {Letter::of("x"), Letter::of("x", -1), Letter::of("y"),
                            Letter::of("y", -1)};
  std::vector<Word> level{Word()};
  for (std::size_t len = 0; len <= bound; ++len) {
    for (const auto& alpha : level) {
      if (dehn_is_identity(concat(subst_apply(m, alpha), x_inv), r)) {
        return alpha;
      }
    }
    if (len == bound) {
      break;
    }
    std::vector<Word> next;
    for (const auto& alpha : level) {
      for (Letter l : letters) {
        if (!alpha.empty() && alpha.back() == l.inverse()) {
          continue;
        }
        next.push_back(concat(alpha, Word::letter(l)));
      }
    }
    level.swap(next);
  }
  return std::nullopt;
}

}  // namespace cbqo::cancel
