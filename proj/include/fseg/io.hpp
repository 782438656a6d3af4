#pragma once

// Problem specs in JSON, JSON exporters and Graphviz output.
//
// Spec schema (spec_version 1):
//   {
//     "spec_version": 1,
//     "letters": ["a", "b", "a′"],
//     "order": [["a", "b"]],               // a <= b, optional
//     "involution": {"a": "a′"},           // optional, default identity
//     "generators": ["ab", "[a′]b"],       // basis words of F
//     "factorizations": [[["a"], ["b"]]]    // optional, each a list of factors
//   }
// Words are strings of letters; a letter whose name is not a single code
// point is written in brackets, e.g. "[a′]".

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainprod.hpp"
#include "envelope.hpp"
#include "minmax.hpp"

namespace fseg {

using json = nlohmann::ordered_json;

/// A schema violation; `pointer` locates it in the document (RFC 6901).
class spec_error : public input_error {
public:
  spec_error(std::string pointer, const std::string& message)
      : input_error((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const { return pointer_; }

private:
  std::string pointer_;
};

struct ProblemSpec {
  AlphabetPtr alphabet;
  FinalSegment segment;
  std::vector<std::vector<FinalSegment>> factorizations;
};

namespace detail {

inline const json& require_member(const json& doc, const std::string& key, const std::string& at) {
  if (!doc.contains(key)) throw spec_error(at, "missing member \"" + key + "\"");
  return doc.at(key);
}

inline std::string require_string(const json& v, const std::string& at) {
  if (!v.is_string()) throw spec_error(at, "expected a string");
  return v.get<std::string>();
}

inline const json& require_array(const json& v, const std::string& at) {
  if (!v.is_array()) throw spec_error(at, "expected an array");
  return v;
}

inline Word parse_word_at(const AlphabetPtr& alpha, const json& v, const std::string& at) {
  const std::string text = require_string(v, at);
  try {
    return parse_word(alpha, text);
  } catch (const input_error& e) {
    throw spec_error(at, e.what());
  }
}

inline FinalSegment parse_words_at(const AlphabetPtr& alpha, const json& v, const std::string& at) {
  std::vector<Word> words;
  const json& arr = require_array(v, at);
  for (std::size_t i = 0; i < arr.size(); ++i)
    words.push_back(parse_word_at(alpha, arr[i], at + "/" + std::to_string(i)));
  return FinalSegment(alpha, std::move(words));
}

// RFC 6901 escaping of a member name.
inline std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

} // namespace detail

inline ProblemSpec parse_spec(const json& doc) {
  if (!doc.is_object()) throw spec_error("", "expected an object");
  if (doc.contains("spec_version")) {
    const json& v = doc.at("spec_version");
    if (!v.is_number_integer() || v.get<long long>() != 1) throw spec_error("/spec_version", "unsupported version");
  }

  std::vector<std::string> letters;
  const json& ls = detail::require_array(detail::require_member(doc, "letters", ""), "/letters");
  for (std::size_t i = 0; i < ls.size(); ++i)
    letters.push_back(detail::require_string(ls[i], "/letters/" + std::to_string(i)));

  auto known = [&](const std::string& name, const std::string& at) {
    if (std::find(letters.begin(), letters.end(), name) == letters.end())
      throw spec_error(at, "unknown letter '" + name + "'");
    return name;
  };
  Alphabet::Pairs order, involution;
  if (doc.contains("order")) {
    const json& os = detail::require_array(doc.at("order"), "/order");
    for (std::size_t i = 0; i < os.size(); ++i) {
      const std::string at = "/order/" + std::to_string(i);
      if (!os[i].is_array() || os[i].size() != 2) throw spec_error(at, "expected a pair [lower, upper]");
      order.emplace_back(known(detail::require_string(os[i][0], at + "/0"), at + "/0"),
                         known(detail::require_string(os[i][1], at + "/1"), at + "/1"));
    }
  }
  if (doc.contains("involution")) {
    const json& inv = doc.at("involution");
    if (!inv.is_object()) throw spec_error("/involution", "expected an object");
    for (const auto& [k, v] : inv.items()) {
      const std::string at = "/involution/" + detail::escape_pointer(k);
      involution.emplace_back(known(k, at), known(detail::require_string(v, at), at));
    }
  }

  ProblemSpec spec;
  try {
    spec.alphabet = make_alphabet(letters, order, involution);
  } catch (const input_error& e) {
    const char* at = "/letters";
    const std::string what = e.what();
    if (what.find("order") != std::string::npos) at = "/order";
    if (what.find("involution") != std::string::npos) at = "/involution";
    throw spec_error(at, what);
  }
  spec.segment = detail::parse_words_at(spec.alphabet, detail::require_member(doc, "generators", ""), "/generators");

  if (doc.contains("factorizations")) {
    const json& fs = detail::require_array(doc.at("factorizations"), "/factorizations");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string at = "/factorizations/" + std::to_string(i);
      const json& factors = detail::require_array(fs[i], at);
      std::vector<FinalSegment> list;
      for (std::size_t j = 0; j < factors.size(); ++j)
        list.push_back(detail::parse_words_at(spec.alphabet, factors[j], at + "/" + std::to_string(j)));
      spec.factorizations.push_back(std::move(list));
    }
  }
  return spec;
}

inline ProblemSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw spec_error("", std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(doc);
}

inline ProblemSpec parse_spec(const char* text) { return parse_spec(std::string(text)); }

/// Reads a spec from a file, or from standard input when path is "-".
inline ProblemSpec load_spec(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return parse_spec(buf.str());
}

inline json spec_to_json(const ProblemSpec& spec) {
  const Alphabet& alpha = *spec.alphabet;
  json doc;
  doc["spec_version"] = 1;
  doc["letters"] = alpha.names();
  json order = json::array();
  for (const auto& [lo, hi] : alpha.order_pairs()) order.push_back({lo, hi});
  doc["order"] = order;
  json inv = json::object();
  for (std::size_t a = 0; a < alpha.size(); ++a)
    if (alpha.bar(static_cast<Letter>(a)) != a) inv[alpha.name(static_cast<Letter>(a))] = alpha.name(alpha.bar(static_cast<Letter>(a)));
  doc["involution"] = inv;
  json gens = json::array();
  for (const auto& w : spec.segment.basis()) gens.push_back(to_string(w));
  doc["generators"] = gens;
  if (!spec.factorizations.empty()) {
    json fs = json::array();
    for (const auto& list : spec.factorizations) {
      json factors = json::array();
      for (const auto& g : list) {
        json words = json::array();
        for (const auto& w : g.basis()) words.push_back(to_string(w));
        factors.push_back(words);
      }
      fs.push_back(factors);
    }
    doc["factorizations"] = fs;
  }
  return doc;
}

inline json to_json(const Word& w) { return to_string(w); }

/// Basis words in canonical order.
inline json to_json(const FinalSegment& f) {
  json out = json::array();
  for (const auto& w : f.basis()) out.push_back(to_string(w));
  return out;
}

inline json to_json(const UpSet& u) {
  json out = json::array();
  for (const auto& t : u.minimal_tuples()) out.push_back(t);
  return out;
}

inline json transitions_json(const TransitionSystem& ts) {
  json out = json::array();
  for (const auto& t : ts.transitions()) out.push_back({t.from, ts.alphabet()->name(t.letter), t.to});
  return out;
}

inline json to_json(const Automaton& aut) {
  json out;
  out["states"] = aut.num_states();
  out["initial"] = aut.initial;
  out["final"] = aut.final;
  out["transitions"] = transitions_json(aut.system);
  return out;
}

inline json to_json(const EnvelopeLattice& env) {
  json out;
  out["target"] = to_json(env.target());
  json elements = json::array();
  for (std::size_t i = 0; i < env.size(); ++i) elements.push_back({{"index", i}, {"basis", to_json(env[i])}, {"text", to_string(env[i])}});
  out["elements"] = elements;
  out["x"] = env.x();
  out["y"] = env.y();
  json hasse = json::array();
  for (auto [i, j] : env.hasse()) hasse.push_back({i, j});
  out["hasse"] = hasse;
  out["transitions"] = transitions_json(env.system());
  return out;
}

inline json to_json(const MinimalDfa& m) {
  const Alphabet& alpha = *m.dfa.alphabet;
  json out;
  out["start"] = m.dfa.start;
  json states = json::array();
  for (std::size_t s = 0; s < m.dfa.size(); ++s) {
    json next = json::object();
    for (std::size_t a = 0; a < alpha.size(); ++a) next[alpha.name(static_cast<Letter>(a))] = m.dfa.delta[s][a];
    states.push_back({{"index", s},
                      {"residual", to_string(m.residuals[s])},
                      {"accepting", static_cast<bool>(m.dfa.accepting[s])},
                      {"next", next}});
  }
  out["states"] = states;
  return out;
}

inline json to_json(const MinmaxResult& r, const EnvelopeLattice& env) {
  json out;
  out["states"] = r.min_states;
  out["transitions"] = r.max_transitions;
  json list = json::array();
  for (const auto& m : r.automata) {
    json a = to_json(m.automaton);
    json names = json::array();
    for (StateId e : m.elements) names.push_back(to_string(env[e]));
    a["elements"] = names;
    list.push_back(a);
  }
  out["automata"] = list;
  return out;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Parallel transitions share one edge labelled with all their letters.
inline void dot_edges(std::ostream& os, const TransitionSystem& ts, bool loops, const std::string& indent) {
  std::map<std::pair<StateId, StateId>, std::string> labels;
  for (const auto& t : ts.transitions()) {
    if (t.from == t.to && !loops) continue;
    auto& l = labels[{t.from, t.to}];
    if (!l.empty()) l += ",";
    l += ts.alphabet()->name(t.letter);
  }
  for (const auto& [e, l] : labels)
    os << indent << "n" << e.first << " -> n" << e.second << " [label=\"" << dot_escape(l) << "\"];\n";
}

} // namespace detail

/// Hasse diagram of the envelope, larger sets on top.
inline std::string hasse_dot(const EnvelopeLattice& env) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < env.size(); ++i) {
    os << "  n" << i << " [label=\"" << detail::dot_escape(to_string(env[i])) << "\"";
    if (i == env.x() || i == env.y()) os << ", style=bold";
    os << "];\n";
  }
  for (auto [i, j] : env.hasse()) os << "  n" << j << " -> n" << i << " [dir=none];\n";
  os << "}\n";
  return os.str();
}

inline std::string transitions_dot(const TransitionSystem& ts, const std::vector<std::string>& names,
                                   const std::string& graph = "transitions", bool loops = false) {
  std::ostringstream os;
  os << "digraph " << graph << " {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < ts.num_states(); ++i)
    os << "  n" << i << " [label=\"" << detail::dot_escape(i < names.size() ? names[i] : std::to_string(i)) << "\"];\n";
  detail::dot_edges(os, ts, loops, "  ");
  os << "}\n";
  return os.str();
}

inline std::string envelope_dot(const EnvelopeLattice& env, bool loops = false) {
  std::vector<std::string> names;
  for (const auto& e : env.elements()) names.push_back(to_string(e));
  return hasse_dot(env) + transitions_dot(env.system(), names, "transitions", loops);
}

} // namespace fseg
