#include "cbqo/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbqo/cancellation.hpp"
#include "cbqo/json_io.hpp"
#include "cbqo/monoid_shift.hpp"
#include "cbqo/subset_qo.hpp"
#include "cbqo/suites.hpp"
#include "cbqo/trees.hpp"

namespace cbqo::cli {

namespace {

using io::json;

constexpr int exit_true          = 0;
constexpr int exit_false         = 1;
constexpr int exit_input_error   = 2;
constexpr int exit_precondition  = 3;
constexpr const char* schema     = "cbqo.report/1";

struct Options {
  std::string   kind;
  std::string   input;
  std::string   right;
  std::string   output;
  std::string   lambda = "1/6";
  std::string   word;
  std::string   variant;
  std::string   suite;
  std::size_t   depth   = 0;
  std::size_t   max     = 100;
  long          h_order = 0;
  std::uint64_t seed    = 1;
  unsigned      jobs    = 1;
  std::optional<std::size_t> size;
  bool          corrupt = false;
  bool          as_json = false;
  bool          timing  = false;
};

struct Report {
  json body = json::object();
  int  code = exit_true;
};

json input_entry(const std::string& path) {
  return {{"path", path}, {"fnv1a64", cancel::fnv_hex(io::slurp(path))}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw ParseError("cannot write '" + path + "'");
  }
  f << text;
}

// A presentation accepted by Dehn's algorithm: the recorded λ is trusted
// only when it was verified on exactly these relators.
cancel::SymmetrizedSet certified_relators(const cancel::Presentation& p) {
  if (!p.meta.cprime) {
    throw PreconditionError("presentation carries no C'(λ) certificate; run check-cprime --output");
  }
  if (p.meta.relator_hash != cancel::relator_hash(p.relators)) {
    throw PreconditionError("C'(λ) certificate does not match the relators");
  }
  auto lambda = cancel::Rational::parse(*p.meta.cprime);
  if (cancel::Rational{1, 6} < lambda) {
    throw PreconditionError("certificate C'(" + lambda.str() + ") is weaker than C'(1/6)");
  }
  auto r = cancel::SymmetrizedSet::from_relators(p.relators);
  r.set_certified(lambda);
  return r;
}

std::string node_str(const std::string& s) {
  return s.empty() ? "-" : s;
}

trees::FiniteTree tree_from_json(const json& j) {
  trees::NodeSet nodes = io::nodes_from_json(j.is_object() && j.contains("nodes") ? j.at("nodes") : j);
  std::string    alphabet;
  if (j.is_object() && j.contains("alphabet")) {
    if (!j.at("alphabet").is_string()) {
      throw MalformedInput("alphabet must be a string");
    }
    alphabet = j.at("alphabet").get<std::string>();
  } else {
    std::set<char> seen;
    for (const auto& s : nodes) {
      seen.insert(s.begin(), s.end());
    }
    alphabet.assign(seen.begin(), seen.end());
    if (alphabet.empty()) {
      alphabet = "01";
    }
  }
  return trees::FiniteTree(alphabet, nodes);
}

const json& words_field(const json& j) {
  return j.is_object() && j.contains("words") ? j.at("words") : j;
}

std::set<Word> m2_set(const json& j) {
  std::set<Word> out;
  for (const auto& s : words_field(j)) {
    if (!s.is_string()) {
      throw MalformedInput("word must be a string");
    }
    out.insert(shift::m2_word(s.get<std::string>()));
  }
  if (out.empty()) {
    throw DegenerateInput("word sets must be nonempty");
  }
  return out;
}

std::set<Word> group_set(const json& j) {
  auto out = io::word_set_from_json(words_field(j));
  if (out.empty()) {
    throw DegenerateInput("word sets must be nonempty");
  }
  return out;
}

////////////////////////////////////////////////////////////////////////

Report cmd_build(const Options& o) {
  Report               r;
  cancel::Presentation p;
  json                 source = io::read_file(o.input);
  if (o.kind == "tree-group") {
    trees::NodeSet nodes =
        io::nodes_from_json(source.is_object() && source.contains("nodes") ? source.at("nodes") : source);
    p = cancel::build_tree_group(nodes, o.depth);
  } else if (o.kind == "graph-group") {
    p = cancel::build_graph_group(io::graph_from_json(source));
  } else {
    throw MalformedInput("--kind must be tree-group or graph-group");
  }
  json pj = io::presentation_to_json(p);
  if (!o.output.empty()) {
    write_text(o.output, pj.dump(2) + "\n");
    r.body["output"] = o.output;
  }
  r.body["outcome"]   = true;
  r.body["relators"]  = p.relators.size();
  r.body["metadata"]  = pj["metadata"];
  if (o.output.empty()) {
    r.body["presentation"] = pj;
  }
  return r;
}

Report cmd_check_cprime(const Options& o) {
  Report r;
  auto   p      = io::presentation_from_json(io::read_file(o.input));
  auto   lambda = cancel::Rational::parse(o.lambda);
  auto   rel    = cancel::SymmetrizedSet::from_relators(p.relators);
  auto   res    = cancel::check_cprime(rel, lambda, o.jobs);
  // The certificate must describe a genuine common prefix of two distinct elements.
  if (res.worst.length > 0
      && (res.element_a == res.element_b || res.element_a.prefix(res.piece.size()) != res.piece
          || res.element_b.prefix(res.piece.size()) != res.piece)) {
    throw Error("internal: piece certificate failed re-verification");
  }
  r.body["lambda"]     = lambda.str();
  r.body["outcome"]    = res.holds;
  r.body["certificate"] = {
      {"piece_length", res.worst.length},
      {"min_length", res.min_length},
      {"ratio", cancel::Rational{static_cast<long>(res.worst.length),
                                 static_cast<long>(std::max<std::size_t>(res.min_length, 1))}
                    .str()},
      {"piece", res.piece.str()},
      {"element_a_class", res.worst.class_a},
      {"element_a_offset", res.worst.offset_a},
      {"element_b_class", res.worst.class_b},
      {"element_b_offset", res.worst.offset_b},
  };
  if (res.holds && !o.output.empty()) {
    p.meta.cprime       = lambda.str();
    p.meta.relator_hash = cancel::relator_hash(p.relators);
    write_text(o.output, io::presentation_to_json(p).dump(2) + "\n");
    r.body["output"] = o.output;
  }
  r.code = res.holds ? exit_true : exit_false;
  return r;
}

Report cmd_dehn(const Options& o) {
  Report r;
  auto   p     = io::presentation_from_json(io::read_file(o.input));
  auto   rel   = certified_relators(p);
  Word   w     = Word::parse(o.word);
  auto   trace = cancel::dehn_trace(w, rel);
  bool   id    = trace.back().empty();
  r.body["word"]    = w.str();
  r.body["outcome"] = id;
  r.body["trace"]   = io::words_to_json(trace);
  r.code            = id ? exit_true : exit_false;
  return r;
}

Report cmd_order(const Options& o) {
  Report r;
  auto   p   = io::presentation_from_json(io::read_file(o.input));
  auto   rel = certified_relators(p);
  Word   w   = Word::parse(o.word);
  auto   ord = cancel::word_order_bounded(w, rel, o.max);
  if (ord && !cancel::dehn_is_identity(power(w, static_cast<long>(*ord)), rel)) {
    throw Error("internal: order failed re-verification");
  }
  r.body["word"]    = w.str();
  r.body["max"]     = o.max;
  r.body["outcome"] = ord.has_value();
  r.body["order"]   = ord ? json(*ord) : json(nullptr);
  if (auto t = cancel::torsion_classify(w, rel)) {
    r.body["torsion"] = {{"root", t->root.str()}, {"relator", t->relator.str()}, {"exponent", t->exponent}};
  }
  r.code = ord ? exit_true : exit_false;
  return r;
}

Report cmd_leq(const Options& o) {
  Report r;
  json   left  = io::read_file(o.input);
  json   right = io::read_file(o.right);
  json   witness;
  bool   found = false;
  if (o.variant == "tree") {
    auto a = tree_from_json(left), b = tree_from_json(right);
    if (auto u = trees::tree_leq(a, b)) {
      if (trees::subtree(b, *u) != a) {
        throw Error("internal: tree witness failed re-verification");
      }
      found = true, witness = node_str(*u);
    }
  } else if (o.variant == "prefix" || o.variant == "suffix") {
    auto a = m2_set(left), b = m2_set(right);
    bool prefix = o.variant == "prefix";
    if (auto m = prefix ? shift::prefix_qo_leq(a, b) : shift::suffix_qo_leq(a, b)) {
      bool ok = prefix ? shift::prefix_witness_holds(a, b, *m) : shift::suffix_witness_holds(a, b, *m);
      if (!ok) {
        throw Error("internal: word witness failed re-verification");
      }
      found = true, witness = m->str();
    }
  } else if (o.variant == "translate") {
    auto a = group_set(left), b = group_set(right);
    if (auto gs = subset::translate_qo_leq(a, b)) {
      if (!subset::translate_witness_holds(a, b, *gs)) {
        throw Error("internal: translate witness failed re-verification");
      }
      found = true, witness = io::words_to_json(*gs);
    }
  } else if (o.variant == "mbt") {
    auto a = io::marks_from_json(left), b = io::marks_from_json(right);
    if (auto u = trees::mbt_leq(a, b)) {
      if (trees::mbt_subtree(b, *u) != a) {
        throw Error("internal: marked-tree witness failed re-verification");
      }
      found = true, witness = node_str(*u);
    }
  } else if (o.variant == "conj-K") {
    if (o.h_order < 0 || o.h_order == 1) {
      throw MalformedInput("--h-order must be 0 (infinite) or at least 2");
    }
    auto a = group_set(left), b = group_set(right);
    subset::FreeProduct fp(o.h_order);
    auto res = subset::conj_qo_leq_K(a, b, fp);
    r.body["universe_size"] = res.universe_size;
    if (res.witness) {
      if (!res.verified) {
        throw Error("internal: conjugation witness failed re-verification");
      }
      found = true, witness = io::words_to_json(*res.witness);
    } else if (res.separating) {
      r.body["separating"] = io::fp_to_json(*res.separating);
    }
  } else {
    throw MalformedInput("unknown leq variant '" + o.variant
                         + "' (tree, prefix, suffix, translate, mbt, conj-K)");
  }
  r.body["variant"] = o.variant;
  r.body["outcome"] = found;
  r.body["witness"] = found ? witness : json(nullptr);
  r.code            = found ? exit_true : exit_false;
  return r;
}

Report cmd_suite(const Options& o) {
  Report            r;
  suites::Config    c{o.seed, o.jobs, o.corrupt, o.size};
  auto              res = suites::run_suite(o.suite, c);
  r.body["suite"]          = res.name;
  r.body["seed"]           = o.seed;
  r.body["jobs"]           = o.jobs;
  if (o.size) {
    r.body["size"] = *o.size;
  }
  r.body["corrupt"]        = o.corrupt;
  r.body["outcome"]        = res.pass;
  r.body["instances"]      = res.instances;
  r.body["failures"]       = res.failures;
  r.body["counterexample"] = res.counterexample ? json(*res.counterexample) : json(nullptr);
  r.body["details"]        = res.details;
  r.code                   = res.pass ? exit_true : exit_false;
  return r;
}

void print_text(std::ostream& out, const json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && !value.empty()) {
      print_text(out, value, prefix + key + ".");
    } else {
      out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bounded checks for quasi-order encodings and small-cancellation groups", "cbqo"};
  app.require_subcommand(1);
  app.add_flag("--json", o.as_json, "Emit a JSON report");
  app.add_flag("--timing", o.timing, "Include wall-clock time in the report");

  auto* build = app.add_subcommand("build", "Build a tree-group or graph-group presentation");
  build->add_option("--kind", o.kind, "tree-group or graph-group")->required();
  build->add_option("--input", o.input, "Tree nodes or graph JSON")->required();
  build->add_option("--depth", o.depth, "Depth d of the tree group");
  build->add_option("--output", o.output, "Presentation file to write");

  auto* cprime = app.add_subcommand("check-cprime", "Check the C'(λ) condition");
  cprime->add_option("--input", o.input, "Presentation JSON")->required();
  cprime->add_option("--lambda", o.lambda, "λ as P/Q");
  cprime->add_option("--jobs", o.jobs, "Worker threads");
  cprime->add_option("--output", o.output, "Write the certified presentation here");

  auto* dehn = app.add_subcommand("dehn", "Decide w = 1 by Dehn's algorithm");
  dehn->add_option("--input", o.input, "Certified presentation JSON")->required();
  dehn->add_option("--word", o.word, "Word to reduce")->required();

  auto* order = app.add_subcommand("order", "Order of a word, up to a bound");
  order->add_option("--input", o.input, "Certified presentation JSON")->required();
  order->add_option("--word", o.word, "Word")->required();
  order->add_option("--max", o.max, "Largest order tried");

  auto* leq = app.add_subcommand("leq", "Decide a quasi-order and print a witness");
  leq->add_option("variant", o.variant, "tree, prefix, suffix, translate, mbt or conj-K")->required();
  leq->add_option("--input", o.input, "Left operand")->required();
  leq->add_option("--right", o.right, "Right operand")->required();
  leq->add_option("--h-order", o.h_order, "Order of h for conj-K, 0 for infinite");

  auto* suite = app.add_subcommand("suite", "Run a named property suite");
  suite->add_option("name", o.suite, "Suite name")->required();
  suite->add_option("--seed", o.seed, "Seed for the random instances");
  suite->add_option("--jobs", o.jobs, "Worker threads");
  suite->add_option("--size", o.size, "Instance count for the random parts");
  suite->add_flag("--corrupt", o.corrupt, "Invert every verdict (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_true : exit_input_error;
  }
  if (o.jobs == 0) {
    o.jobs = 1;
  }

  auto*       sub     = app.get_subcommands().front();
  std::string command = sub->get_name();
  Report      r;
  json        inputs = json::array();
  auto        start  = std::chrono::steady_clock::now();
  try {
    for (const auto* path : {&o.input, &o.right}) {
      if (!path->empty()) {
        inputs.push_back(input_entry(*path));
      }
    }
    if (command == "build") {
      r = cmd_build(o);
    } else if (command == "check-cprime") {
      r = cmd_check_cprime(o);
    } else if (command == "dehn") {
      r = cmd_dehn(o);
    } else if (command == "order") {
      r = cmd_order(o);
    } else if (command == "leq") {
      r = cmd_leq(o);
    } else {
      r = cmd_suite(o);
    }
  } catch (const PreconditionError& e) {
    err << "cbqo " << command << ": " << e.what() << "\n";
    return exit_precondition;
  } catch (const Error& e) {
    err << "cbqo " << command << ": " << e.what() << "\n";
    return exit_input_error;
  } catch (const json::exception& e) {
    err << "cbqo " << command << ": " << e.what() << "\n";
    return exit_input_error;
  }

  json report = {{"schema", schema}, {"command", command}, {"inputs", inputs}};
  report.update(r.body);
  if (o.timing) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  if (o.as_json) {
    out << report.dump(2) << "\n";
  } else {
    print_text(out, report);
  }
  return r.code;
}

}  // namespace cbqo::cli
