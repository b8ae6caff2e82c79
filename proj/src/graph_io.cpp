// SPDX-License-Identifier: Apache-2.0

#include "christoffel/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace christoffel {

namespace {

using nlohmann::json;

std::string edge_label(const CompactGraph& g, std::size_t label_index, EdgeLabels labels) {
  return labels == EdgeLabels::words ? g.label_word(label_index).str() : g.label_length(label_index).str();
}

// Integers are emitted as JSON numbers when they fit, as strings otherwise.
json integer_json(const Integer& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

// Tree nodes are always shown as p/q, including 1/1.
std::string fraction_text(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  return Integer(j.get<std::uint64_t>());
}

template <typename F>
auto parse_guarded(const std::string& text, F build) {
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace

std::string export_dot(const CompactGraph& g, EdgeLabels labels) {
  std::ostringstream out;
  out << "digraph " << (labels == EdgeLabels::words ? "compact" : "sturmian") << " {\n";
  out << "  rankdir=LR;\n";
  for (const auto& v : g.vertices) {
    out << "  v" << v.id << " [label=\"" << v.id << "\"" << (v.final ? ", shape=doublecircle" : ", shape=circle")
        << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"" << edge_label(g, e.label_index, labels) << "\""
        << (e.skip ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const Automaton& aut) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  for (std::size_t s = 0; s < aut.state_count(); ++s) {
    out << "  s" << s << " [label=\"" << s << "\"" << (aut.final[s] ? ", shape=doublecircle" : ", shape=circle")
        << "];\n";
  }
  out << "  start [shape=point];\n  start -> s" << aut.initial << ";\n";
  for (const auto& t : aut.transitions) {
    out << "  s" << t.source << " -> s" << t.target << " [label=\"" << t.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const TreeEmbedding& tree, EdgeLabels labels) {
  std::ostringstream out;
  out << "digraph tree {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const std::string name = labels == EdgeLabels::words ? tree.nodes[i].str() : fraction_text(tree.fractions[i]);
    out << "  n" << i << " [label=\"" << (name.empty() ? "1" : name) << "\"];\n";
  }
  for (const auto& e : tree.edges) {
    out << "  n" << e.source << " -> n" << e.target << " [label=\""
        << (labels == EdgeLabels::words ? e.word_label.str() : e.length_label.str()) << "\""
        << (e.skip ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CompactGraph& g) {
  json j;
  j["system"] = to_string(g.system);
  j["labels"] = json::array();
  for (const auto& l : g.labels) j["labels"].push_back(l.str());
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) {
    j["vertices"].push_back({{"id", v.id}, {"prefix_counts", v.prefix_counts}, {"final", v.final}});
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back({{"src", e.source},
                          {"dst", e.target},
                          {"label_index", e.label_index},
                          {"label_word", g.label_word(e.label_index).str()},
                          {"label_length", integer_json(g.label_length(e.label_index))},
                          {"skip", e.skip}});
  }
  return j.dump(2) + "\n";
}

std::string export_json(const Automaton& aut) {
  json j;
  j["initial"] = aut.initial;
  j["states"] = json::array();
  for (std::size_t s = 0; s < aut.state_count(); ++s) j["states"].push_back({{"id", s}, {"final", bool(aut.final[s])}});
  j["transitions"] = json::array();
  for (const auto& t : aut.transitions) {
    j["transitions"].push_back({{"src", t.source}, {"dst", t.target}, {"label", t.label.str()}});
  }
  return j.dump(2) + "\n";
}

std::string export_json(const TreeEmbedding& tree) {
  json j;
  j["directive"] = tree.directive.str();
  j["nodes"] = json::array();
  for (const auto& n : tree.nodes) j["nodes"].push_back(n.str());
  j["fractions"] = json::array();
  for (const auto& f : tree.fractions) j["fractions"].push_back(fraction_text(f));
  j["edges"] = json::array();
  for (const auto& e : tree.edges) {
    j["edges"].push_back({{"src", e.source},
                          {"dst", e.target},
                          {"label_word", e.word_label.str()},
                          {"label_length", integer_json(e.length_label)},
                          {"skip", e.skip}});
  }
  return j.dump(2) + "\n";
}

CompactGraph compact_graph_from_json(const std::string& text) {
  return parse_guarded(text, [](const json& j) {
    CompactGraph g;
    g.system = parse_system(j.at("system").get<std::string>());
    for (const auto& l : j.at("labels")) g.labels.emplace_back(l.get<std::string>());
    if (g.labels.size() != g.system.size()) throw std::invalid_argument("label count differs from m");
    for (const auto& v : j.at("vertices")) {
      g.vertices.push_back({v.at("id").get<std::size_t>(), v.at("prefix_counts").get<std::vector<std::size_t>>(),
                            v.at("final").get<bool>()});
    }
    for (const auto& e : j.at("edges")) {
      CompactGraph::Edge edge{e.at("src").get<std::size_t>(), e.at("dst").get<std::size_t>(),
                              e.at("label_index").get<std::size_t>(), e.value("skip", false)};
      if (edge.label_index >= g.labels.size() || edge.source >= g.vertices.size() ||
          edge.target >= g.vertices.size()) {
        throw std::invalid_argument("edge refers to a missing vertex or label");
      }
      if (e.contains("label_word") && e.at("label_word").get<std::string>() != g.labels[edge.label_index].str()) {
        throw std::invalid_argument("edge label word disagrees with its label index");
      }
      if (e.contains("label_length") && integer_from_json(e.at("label_length")) != g.label_length(edge.label_index)) {
        throw std::invalid_argument("edge label length disagrees with its label index");
      }
      g.edges.push_back(edge);
    }
    return g;
  });
}

Automaton automaton_from_json(const std::string& text) {
  return parse_guarded(text, [](const json& j) {
    Automaton aut;
    aut.initial = j.at("initial").get<std::size_t>();
    const auto& states = j.at("states");
    aut.final.assign(states.size(), false);
    for (const auto& s : states) {
      const std::size_t id = s.at("id").get<std::size_t>();
      if (id >= aut.final.size()) throw std::invalid_argument("state id out of range");
      aut.final[id] = s.at("final").get<bool>();
    }
    if (aut.initial >= aut.final.size()) throw std::invalid_argument("initial state out of range");
    for (const auto& t : j.at("transitions")) {
      Automaton::Transition tr{t.at("src").get<std::size_t>(), t.at("dst").get<std::size_t>(),
                               BinaryWord(t.at("label").get<std::string>())};
      if (tr.source >= aut.final.size() || tr.target >= aut.final.size() || tr.label.empty()) {
        throw std::invalid_argument("malformed transition");
      }
      aut.transitions.push_back(std::move(tr));
    }
    return aut;
  });
}

std::string export_text(const CompactGraph& g, EdgeLabels labels) {
  std::ostringstream out;
  out << to_string(g.system) << "\n";
  out << "vertices: " << g.vertices.size() << "\n";
  out << "edges: " << g.edges.size() << "\n";
  std::map<std::string, std::size_t> multiset;
  for (const auto& e : g.edges) {
    out << "  " << e.source << " -> " << e.target << "  " << edge_label(g, e.label_index, labels)
        << (e.skip ? "  (skip)" : "") << "\n";
    ++multiset[edge_label(g, e.label_index, labels)];
  }
  out << "label multiset: {";
  bool first = true;
  // Words sort shortlex, lengths numerically; both coincide with (size, text) order.
  std::vector<std::pair<std::string, std::size_t>> ordered(multiset.begin(), multiset.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.first.size(), x.first) < std::make_pair(y.first.size(), y.first);
  });
  for (const auto& [label, count] : ordered) {
    for (std::size_t k = 0; k < count; ++k) {
      out << (first ? "" : ",") << label;
      first = false;
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_text(const Automaton& aut) {
  std::ostringstream out;
  std::size_t finals = 0;
  for (bool f : aut.final) finals += f ? 1 : 0;
  out << "states: " << aut.state_count() << "\n";
  out << "final states: " << finals << "\n";
  out << "transitions: " << aut.transitions.size() << "\n";
  out << "deterministic: " << (is_deterministic(aut) ? "yes" : "no") << "\n";
  out << "homogeneous: " << (is_homogeneous(aut) ? "yes" : "no") << "\n";
  for (const auto& t : aut.transitions) {
    out << "  " << t.source << " -> " << t.target << "  " << t.label << "\n";
  }
  return out.str();
}

std::string export_text(const TreeEmbedding& tree) {
  std::ostringstream out;
  out << "directive word: " << tree.directive << "\n";
  out << "nodes:";
  for (const auto& n : tree.nodes) out << " " << (n.empty() ? "1" : n.str());
  out << "\nfractions:";
  for (const auto& f : tree.fractions) out << " " << fraction_text(f);
  out << "\nedges:\n";
  for (const auto& e : tree.edges) {
    out << "  " << e.source << " -> " << e.target << "  " << e.word_label << " / " << e.length_label
        << (e.skip ? "  (skip)" : "") << "\n";
  }
  return out.str();
}

}  // namespace christoffel
