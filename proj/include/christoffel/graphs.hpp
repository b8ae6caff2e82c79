// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <vector>

#include "christoffel/arith.hpp"
#include "christoffel/binary_word.hpp"
#include "christoffel/ostrowski.hpp"

namespace christoffel {

/// The compact directed acyclic word graph of the central word p.
///
/// Vertices are the prefixes of the formal word L_0^{c1} L_1^{c2} ...
/// L_{m-1}^{cm}, listed in order of length and keyed by how many copies of each
/// L_i they contain. Vertex 0 is the origin; every vertex is final.
struct CompactGraph {
  struct Vertex {
    std::size_t id = 0;
    std::vector<std::size_t> prefix_counts;  // one entry per L_i
    bool final = true;
  };
  struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t label_index = 0;  // the edge reads L_{label_index}
    bool skip = false;            // curved edge that jumps a block boundary
  };

  OstrowskiSystem system{1};
  std::vector<BinaryWord> labels;  // L_0, ..., L_{m-1}
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // sorted by (source, target)

  [[nodiscard]] const BinaryWord& label_word(std::size_t i) const { return labels.at(i); }
  /// |L_i| = q_i, the label of the edge in the Sturmian graph.
  [[nodiscard]] Integer label_length(std::size_t i) const { return system.denominator(static_cast<int>(i)); }
  [[nodiscard]] std::vector<std::size_t> out_edges(std::size_t vertex) const;
};

/// Requires m >= 2; throws std::domain_error otherwise.
CompactGraph compact_graph(const OstrowskiSystem& sys);

/// A sequence of edge indices starting at the origin.
using GraphPath = std::vector<std::size_t>;

BinaryWord path_word(const CompactGraph& g, const GraphPath& path);
Integer path_length(const CompactGraph& g, const GraphPath& path);
/// How many edges of each label L_0..L_{m-1} the path uses.
std::vector<Integer> path_label_counts(const CompactGraph& g, const GraphPath& path);

/// Every path starting at the origin, the empty path included, in
/// depth-first order taking out-edges by increasing target.
std::vector<GraphPath> enumerate_origin_paths(const CompactGraph& g);

/// The path whose label is s, found by following first letters.
/// Throws std::invalid_argument when no path spells s.
GraphPath path_for_suffix(const CompactGraph& g, const BinaryWord& s);

/// The path whose length labels sum to N. Throws std::out_of_range unless
/// exactly one path qualifies.
GraphPath path_for_length(const CompactGraph& g, const Integer& n);

/// A generalized automaton: transitions carry nonempty words (single letters
/// for an ordinary automaton).
struct Automaton {
  struct Transition {
    std::size_t source = 0;
    std::size_t target = 0;
    BinaryWord label;
  };

  std::size_t initial = 0;
  std::vector<bool> final;  // one flag per state
  std::vector<Transition> transitions;

  [[nodiscard]] std::size_t state_count() const noexcept { return final.size(); }
};

/// Out-edges never share a first letter.
bool is_deterministic(const Automaton& aut);
/// All edges entering a state carry the same label.
bool is_homogeneous(const Automaton& aut);
/// Labels of all paths from the initial state to a final state. Throws
/// std::invalid_argument if the automaton has a cycle.
std::set<BinaryWord> accepted_language(const Automaton& aut);

/// Equality up to renaming states, for deterministic automata whose states
/// are all reachable.
bool isomorphic(const Automaton& lhs, const Automaton& rhs);

/// The compact graph read as a generalized automaton over words.
Automaton to_automaton(const CompactGraph& g);

/// Spells every L_i edge letter by letter. Original vertices stay final,
/// inserted states are not; each skip edge is redirected to the state after
/// the first letter of its target's incoming chain edge.
Automaton expand_to_automaton(const CompactGraph& g);

/// Repeatedly removes a non-initial, non-final state with a single out-edge,
/// extending the labels of its in-edges. States keep their relative order.
/// Throws std::invalid_argument on a nondeterministic or inhomogeneous input.
Automaton compact_automaton(const Automaton& aut);

/// The root-to-p path in the tree of central words alongside the root-to-s
/// path in the Stern-Brocot tree, with the extra edges that turn each into the
/// compact graph (word labels) and the Sturmian graph (length labels).
struct TreeEmbedding {
  struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    BinaryWord word_label;
    Integer length_label;
    bool skip = false;
  };

  BinaryWord directive;
  std::vector<BinaryWord> nodes;      // Pal of each prefix of the directive word
  std::vector<Rational> fractions;    // Stern-Brocot nodes down to the slope of M_m
  std::vector<Edge> edges;            // sorted by (source, target)
};

/// Requires m >= 2. Throws std::logic_error if the embedding fails to
/// reproduce compact_graph(sys) with either labelling.
TreeEmbedding tree_embedding(const OstrowskiSystem& sys);

}  // namespace christoffel
