#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cbqo/cancellation.hpp"
#include "cbqo/cli.hpp"
#include "cbqo/json_io.hpp"
#include "cbqo/subset_qo.hpp"
#include "cbqo/suites.hpp"
#include "cbqo/trees.hpp"

namespace py = pybind11;
using namespace cbqo;

namespace {

std::vector<Word> parse_words(const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts) {
    out.push_back(Word::parse(t));
  }
  return out;
}

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) {
    out.push_back(w.str());
  }
  return out;
}

subset::WordSet word_set(const std::vector<std::string>& texts) {
  auto ws = parse_words(texts);
  return {ws.begin(), ws.end()};
}

cancel::SymmetrizedSet certified(const std::vector<std::string>& relators) {
  auto r = cancel::SymmetrizedSet::from_relators(parse_words(relators));
  if (!cancel::certify(r, cancel::Rational::parse("1/6")).holds) {
    throw PreconditionError("relators are not C'(1/6)");
  }
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Small-cancellation presentations and quasi-orders";

  py::register_exception<Error>(m, "Error");
  py::register_exception<PreconditionError>(m, "PreconditionError", m.attr("Error"));

  m.def("reduce", [](const std::string& w) { return free_reduce(Word::parse(w)).str(); });
  m.def("cyclic_word", [](const std::string& w) { return cyclic_word(Word::parse(w)).str(); });

  m.def("build_tree_group_json", [](const std::vector<std::string>& nodes, std::size_t depth) {
    return io::presentation_to_json(cancel::build_tree_group(io::nodes_from_json(io::json(nodes)), depth)).dump();
  });
  m.def("build_graph_group_json",
        [](std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
          return io::presentation_to_json(cancel::build_graph_group(cancel::Graph::make(vertices, edges))).dump();
        });

  m.def("check_cprime",
        [](const std::vector<std::string>& relators, const std::string& lambda, unsigned jobs) {
          auto r   = cancel::SymmetrizedSet::from_relators(parse_words(relators));
          auto res = cancel::check_cprime(r, cancel::Rational::parse(lambda), jobs);
          py::dict d;
          d["holds"]        = res.holds;
          d["piece"]        = res.piece.str();
          d["piece_length"] = res.worst.length;
          d["min_length"]   = res.min_length;
          d["element_a"]    = res.element_a.str();
          d["element_b"]    = res.element_b.str();
          return d;
        },
        py::arg("relators"), py::arg("lambda_") = "1/6", py::arg("jobs") = 1);

  m.def("dehn_trace", [](const std::vector<std::string>& relators, const std::string& w) {
    return strs(cancel::dehn_trace(Word::parse(w), certified(relators)));
  });
  m.def("word_order",
        [](const std::vector<std::string>& relators, const std::string& w, std::size_t max_order) {
          return cancel::word_order_bounded(Word::parse(w), certified(relators), max_order);
        },
        py::arg("relators"), py::arg("word"), py::arg("max_order") = 100);

  m.def("tree_leq", [](const std::string& alphabet, const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
    return trees::tree_leq(trees::FiniteTree(alphabet, io::nodes_from_json(io::json(a))),
                           trees::FiniteTree(alphabet, io::nodes_from_json(io::json(b))));
  });
  m.def("translate_leq", [](const std::vector<std::string>& a, const std::vector<std::string>& b)
                             -> std::optional<std::vector<std::string>> {
    auto got = subset::translate_qo_leq(word_set(a), word_set(b));
    if (!got) {
      return std::nullopt;
    }
    return strs(*got);
  });

  m.def("suite_names", &suites::suite_names);
  m.def("run_suite_json",
        [](const std::string& name, std::uint64_t seed, unsigned jobs, bool corrupt,
           std::optional<std::size_t> size) {
          suites::Result r;
          {
            py::gil_scoped_release release;
            r = suites::run_suite(name, {seed, jobs, corrupt, size});
          }
          io::json j{{"name", r.name},         {"pass", r.pass},      {"instances", r.instances},
                     {"failures", r.failures}, {"details", r.details}};
          if (r.counterexample) {
            j["counterexample"] = *r.counterexample;
          }
          return j.dump();
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("jobs") = 1, py::arg("corrupt") = false,
        py::arg("size") = py::none());

  m.def("cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "cbqo");
    std::vector<const char*> argv;
    for (const auto& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
