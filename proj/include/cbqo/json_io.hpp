#pragma once

// JSON forms of the library's values. Every reader throws ParseError or
// MalformedInput with a message naming the offending field.

#include <string>
#include <vector>

#include <json.hpp>

#include "cbqo/cancellation.hpp"
#include "cbqo/qo_core.hpp"
#include "cbqo/subset_qo.hpp"
#include "cbqo/trees.hpp"
#include "cbqo/words.hpp"

namespace cbqo::io {

using json = nlohmann::ordered_json;

json read_file(const std::string& path);
// Raw bytes of a file; throws ParseError when unreadable.
std::string slurp(const std::string& path);

json                 relation_to_json(const qo::FiniteRelation& r);
qo::FiniteRelation   relation_from_json(const json& j);
json                 action_to_json(const qo::FiniteMonoidAction& a);
qo::FiniteMonoidAction action_from_json(const json& j);

// Node strings; "" and "-" both denote the empty string on input.
json           nodes_to_json(const trees::NodeSet& t);
trees::NodeSet nodes_from_json(const json& j);
json                    marks_to_json(const trees::MarkedBinaryTree& m);
trees::MarkedBinaryTree marks_from_json(const json& j);

json                 word_set_to_json(const std::set<Word>& s);
std::set<Word>       word_set_from_json(const json& j, Alphabet alphabet = Alphabet::group);
json                 words_to_json(const std::vector<Word>& ws);

json          graph_to_json(const cancel::Graph& g);
cancel::Graph graph_from_json(const json& j);

json                 presentation_to_json(const cancel::Presentation& p);
cancel::Presentation presentation_from_json(const json& j);

// [["g-word", k], ...]: each G-syllable followed by the h-exponent after it,
// "-" for an empty syllable and 0 for a missing trailing power.
json                fp_to_json(const subset::FPWord& w);
subset::FPWord      fp_from_json(const json& j, const subset::FreeProduct& fp);

}  // namespace cbqo::io
