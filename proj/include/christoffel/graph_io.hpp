// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "christoffel/graphs.hpp"

namespace christoffel {

/// Which label a compact-graph edge shows: the word L_i or its length q_i
/// (the Sturmian graph).
enum class EdgeLabels { words, lengths };

/// Graphviz text. Vertices appear in id order, edges in stored order; the
/// `label` attribute carries the edge label.
std::string export_dot(const CompactGraph& g, EdgeLabels labels = EdgeLabels::words);
std::string export_dot(const Automaton& aut);
std::string export_dot(const TreeEmbedding& tree, EdgeLabels labels = EdgeLabels::words);

/// JSON for a compact graph:
///   {"system": "alphas=[...]", "labels": [L_0, ...],
///    "vertices": [{"id", "prefix_counts", "final"}],
///    "edges": [{"src", "dst", "label_index", "label_word", "label_length", "skip"}]}
std::string export_json(const CompactGraph& g);

/// JSON for an automaton:
///   {"initial": i, "states": [{"id", "final"}], "transitions": [{"src", "dst", "label"}]}
std::string export_json(const Automaton& aut);

/// JSON for a tree embedding:
///   {"directive": v, "nodes": [...], "fractions": ["p/q", ...],
///    "edges": [{"src", "dst", "label_word", "label_length", "skip"}]}
std::string export_json(const TreeEmbedding& tree);

/// Inverses of export_json. Throw std::invalid_argument on malformed text.
CompactGraph compact_graph_from_json(const std::string& text);
Automaton automaton_from_json(const std::string& text);

/// Line-oriented summaries used by the command-line tool.
std::string export_text(const CompactGraph& g, EdgeLabels labels = EdgeLabels::words);
std::string export_text(const Automaton& aut);
std::string export_text(const TreeEmbedding& tree);

}  // namespace christoffel
