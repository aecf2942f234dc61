#include "cbqo/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cbqo::io {

namespace {

  const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
      throw MalformedInput(std::string("expected an object with field \"") + name + "\"");
    }
    return j.at(name);
  }

  std::size_t index_value(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
      throw MalformedInput(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
  }

  const std::string& string_value(const json& j, const char* what) {
    if (!j.is_string()) {
      throw MalformedInput(std::string(what) + " must be a string");
    }
    return j.get_ref<const std::string&>();
  }

  const json& array_value(const json& j, const char* what) {
    if (!j.is_array()) {
      throw MalformedInput(std::string(what) + " must be an array");
    }
    return j;
  }

}  // namespace

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_file(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

json relation_to_json(const qo::FiniteRelation& r) {
  json pairs = json::array();
  for (auto [i, j] : r.pairs()) {
    pairs.push_back({i, j});
  }
  return {{"size", r.size()}, {"pairs", pairs}};
}

qo::FiniteRelation relation_from_json(const json& j) {
  std::size_t const                                n = index_value(field(j, "size"), "size");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : array_value(field(j, "pairs"), "pairs")) {
    if (!p.is_array() || p.size() != 2) {
      throw MalformedInput("each pair must be a two-element array");
    }
    pairs.emplace_back(index_value(p[0], "pair entry"), index_value(p[1], "pair entry"));
  }
  return qo::FiniteRelation::from_pairs(n, pairs);
}

json action_to_json(const qo::FiniteMonoidAction& a) {
  return {{"size", a.size()}, {"generators", a.generators()}};
}

qo::FiniteMonoidAction action_from_json(const json& j) {
  std::size_t const     n = index_value(field(j, "size"), "size");
  std::vector<qo::Table> gens;
  for (const auto& g : array_value(field(j, "generators"), "generators")) {
    qo::Table t;
    for (const auto& v : array_value(g, "generator table")) {
      t.push_back(static_cast<std::uint32_t>(index_value(v, "table entry")));
    }
    gens.push_back(std::move(t));
  }
  return qo::FiniteMonoidAction(n, std::move(gens));
}

json nodes_to_json(const trees::NodeSet& t) {
  std::vector<std::string> nodes(t.begin(), t.end());
  std::stable_sort(nodes.begin(), nodes.end(), ShortlexLess{});
  return nodes;
}

trees::NodeSet nodes_from_json(const json& j) {
  trees::NodeSet out;
  for (const auto& s : array_value(j, "tree")) {
    const auto& v = string_value(s, "tree node");
    out.insert(v == "-" ? std::string() : v);
  }
  return out;
}

json marks_to_json(const trees::MarkedBinaryTree& m) {
  return {{"marks", nodes_to_json(m.marks)}};
}

trees::MarkedBinaryTree marks_from_json(const json& j) {
  return {nodes_from_json(j.is_array() ? j : field(j, "marks"))};
}

json word_set_to_json(const std::set<Word>& s) {
  std::vector<Word> ws(s.begin(), s.end());
  std::stable_sort(ws.begin(), ws.end(), ShortlexLess{});
  return words_to_json(ws);
}

json words_to_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) {
    out.push_back(w.str());
  }
  return out;
}

std::set<Word> word_set_from_json(const json& j, Alphabet alphabet) {
  std::set<Word> out;
  for (const auto& s : array_value(j, "word set")) {
    out.insert(Word::parse(string_value(s, "word"), alphabet));
  }
  return out;
}

json graph_to_json(const cancel::Graph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges) {
    edges.push_back({i, j});
  }
  return {{"vertices", g.vertices}, {"edges", edges}};
}

cancel::Graph graph_from_json(const json& j) {
  std::size_t const                                n = index_value(field(j, "vertices"), "vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : array_value(field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw MalformedInput("each edge must be a two-element array");
    }
    edges.emplace_back(index_value(e[0], "edge endpoint"), index_value(e[1], "edge endpoint"));
  }
  return cancel::Graph::make(n, edges);
}

json presentation_to_json(const cancel::Presentation& p) {
  json meta = {{"kind", p.meta.kind}};
  meta["depth"]        = p.meta.depth ? json(*p.meta.depth) : json(nullptr);
  meta["source_hash"]  = p.meta.source_hash;
  meta["relator_hash"] = p.meta.relator_hash;
  meta["cprime"]       = p.meta.cprime ? json(*p.meta.cprime) : json(nullptr);
  return {{"generators", p.generators}, {"relators", words_to_json(p.relators)}, {"metadata", meta}};
}

cancel::Presentation presentation_from_json(const json& j) {
  cancel::Presentation p;
  for (const auto& g : array_value(field(j, "generators"), "generators")) {
    p.generators.push_back(string_value(g, "generator"));
  }
  for (const auto& r : array_value(field(j, "relators"), "relators")) {
    Word w = Word::parse(string_value(r, "relator"));
    if (w.empty() || !is_freely_reduced(w)) {
      throw MalformedInput("relator '" + w.str() + "' must be nonempty and freely reduced");
    }
    p.relators.push_back(std::move(w));
  }
  if (j.contains("metadata")) {
    const auto& m = j.at("metadata");
    if (!m.is_object()) {
      throw MalformedInput("metadata must be an object");
    }
    p.meta.kind = m.contains("kind") ? string_value(m.at("kind"), "kind") : "custom";
    if (m.contains("depth") && !m.at("depth").is_null()) {
      p.meta.depth = index_value(m.at("depth"), "depth");
    }
    if (m.contains("source_hash")) {
      p.meta.source_hash = string_value(m.at("source_hash"), "source_hash");
    }
    if (m.contains("relator_hash")) {
      p.meta.relator_hash = string_value(m.at("relator_hash"), "relator_hash");
    }
    if (m.contains("cprime") && !m.at("cprime").is_null()) {
      p.meta.cprime = string_value(m.at("cprime"), "cprime");
    }
  } else {
    p.meta.kind = "custom";
  }
  return p;
}

json fp_to_json(const subset::FPWord& w) {
  json out = json::array();
  std::size_t i = 0;
  while (i < w.size()) {
    std::string g = "-";
    long        k = 0;
    if (auto* word = std::get_if<Word>(&w[i])) {
      g = word->str();
      ++i;
    }
    if (i < w.size()) {
      k = std::get<long>(w[i]);
      ++i;
    }
    out.push_back({g, k});
  }
  return out;
}

subset::FPWord fp_from_json(const json& j, const subset::FreeProduct& fp) {
  subset::FPWord raw;
  for (const auto& pair : array_value(j, "free-product word")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer()) {
      throw MalformedInput("free-product syllables are [\"g-word\", k] pairs");
    }
    raw.emplace_back(Word::parse(string_value(pair[0], "syllable")));
    raw.emplace_back(pair[1].get<long>());
  }
  return fp.normalize(raw);
}

}  // namespace cbqo::io
