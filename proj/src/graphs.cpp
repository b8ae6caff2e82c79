// SPDX-License-Identifier: Apache-2.0

#include "christoffel/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "christoffel/continuants.hpp"
#include "christoffel/words.hpp"

namespace christoffel {

namespace {

template <typename Edge>
void sort_by_endpoints(std::vector<Edge>& edges) {
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.source, x.target) < std::tie(y.source, y.target);
  });
}

}  // namespace

std::vector<std::size_t> CompactGraph::out_edges(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].source == vertex) out.push_back(e);
  }
  return out;
}

CompactGraph compact_graph(const OstrowskiSystem& sys) {
  const std::vector<Integer> cs = sys.central_exponents();
  const std::size_t m = sys.size();
  CompactGraph g;
  g.system = sys;
  for (std::size_t i = 0; i < m; ++i) g.labels.push_back(l_word(sys, i));

  // block[t] is the symbol at formal position t; start[i] the first position of block i.
  std::vector<std::size_t> block;
  std::vector<std::size_t> start(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    start[i] = block.size();
    block.insert(block.end(), to_size(cs[i]), i);
  }
  start[m] = block.size();

  std::vector<std::size_t> counts(m, 0);
  for (std::size_t t = 0; t <= block.size(); ++t) {
    g.vertices.push_back({t, counts, true});
    if (t < block.size()) ++counts[block[t]];
  }
  for (std::size_t t = 0; t < block.size(); ++t) g.edges.push_back({t, t + 1, block[t], false});
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (cs[i] == 0 || cs[i + 1] == 0) continue;
    const std::size_t block_end = start[i + 1];
    for (std::size_t u = start[i]; u < block_end; ++u) g.edges.push_back({u, block_end + 1, i + 1, true});
  }
  sort_by_endpoints(g.edges);
  return g;
}

BinaryWord path_word(const CompactGraph& g, const GraphPath& path) {
  BinaryWord out;
  for (std::size_t e : path) out += g.label_word(g.edges.at(e).label_index);
  return out;
}

Integer path_length(const CompactGraph& g, const GraphPath& path) {
  Integer out = 0;
  for (std::size_t e : path) out += g.label_length(g.edges.at(e).label_index);
  return out;
}

std::vector<Integer> path_label_counts(const CompactGraph& g, const GraphPath& path) {
  std::vector<Integer> counts(g.labels.size(), Integer(0));
  for (std::size_t e : path) counts.at(g.edges.at(e).label_index) += 1;
  return counts;
}

std::vector<GraphPath> enumerate_origin_paths(const CompactGraph& g) {
  std::vector<GraphPath> out;
  GraphPath current;
  std::function<void(std::size_t)> walk = [&](std::size_t vertex) {
    out.push_back(current);
    for (std::size_t e : g.out_edges(vertex)) {
      current.push_back(e);
      walk(g.edges[e].target);
      current.pop_back();
    }
  };
  walk(0);
  return out;
}

GraphPath path_for_suffix(const CompactGraph& g, const BinaryWord& s) {
  GraphPath path;
  std::size_t vertex = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool moved = false;
    for (std::size_t e : g.out_edges(vertex)) {
      const BinaryWord& label = g.label_word(g.edges[e].label_index);
      if (label.front() != s[pos]) continue;
      if (s.view().substr(pos, label.size()) != label.view()) break;
      path.push_back(e);
      vertex = g.edges[e].target;
      pos += label.size();
      moved = true;
      break;
    }
    if (!moved) throw std::invalid_argument("no path from the origin spells " + s.str());
  }
  return path;
}

GraphPath path_for_length(const CompactGraph& g, const Integer& n) {
  std::vector<GraphPath> found;
  GraphPath current;
  std::function<void(std::size_t, const Integer&)> walk = [&](std::size_t vertex, const Integer& rest) {
    if (rest == 0) found.push_back(current);
    for (std::size_t e : g.out_edges(vertex)) {
      const Integer step = g.label_length(g.edges[e].label_index);
      if (step > rest) continue;
      current.push_back(e);
      walk(g.edges[e].target, rest - step);
      current.pop_back();
    }
  };
  if (n >= 0) walk(0, n);
  if (found.size() != 1) {
    throw std::out_of_range(std::to_string(found.size()) + " paths have length " + n.str() + ", expected one");
  }
  return found.front();
}

bool is_deterministic(const Automaton& aut) {
  std::set<std::pair<std::size_t, char>> seen;
  for (const auto& t : aut.transitions) {
    if (t.label.empty() || !seen.insert({t.source, t.label.front()}).second) return false;
  }
  return true;
}

bool is_homogeneous(const Automaton& aut) {
  std::map<std::size_t, const BinaryWord*> incoming;
  for (const auto& t : aut.transitions) {
    auto [it, inserted] = incoming.emplace(t.target, &t.label);
    if (!inserted && *it->second != t.label) return false;
  }
  return true;
}

std::set<BinaryWord> accepted_language(const Automaton& aut) {
  std::vector<std::vector<const Automaton::Transition*>> out(aut.state_count());
  for (const auto& t : aut.transitions) out.at(t.source).push_back(&t);
  std::set<BinaryWord> words;
  std::vector<char> on_stack(aut.state_count(), 0);
  BinaryWord current;
  std::function<void(std::size_t)> walk = [&](std::size_t state) {
    if (on_stack[state]) throw std::invalid_argument("automaton has a cycle");
    on_stack[state] = 1;
    if (aut.final[state]) words.insert(current);
    for (const auto* t : out[state]) {
      const std::size_t before = current.size();
      current += t->label;
      walk(t->target);
      current = current.prefix(before);
    }
    on_stack[state] = 0;
  };
  walk(aut.initial);
  return words;
}

bool isomorphic(const Automaton& lhs, const Automaton& rhs) {
  const std::size_t n = lhs.state_count();
  if (n != rhs.state_count() || lhs.transitions.size() != rhs.transitions.size()) return false;
  auto outgoing = [](const Automaton& aut) {
    std::vector<std::map<BinaryWord, std::size_t>> out(aut.state_count());
    for (const auto& t : aut.transitions) out.at(t.source).emplace(t.label, t.target);
    return out;
  };
  const auto left = outgoing(lhs);
  const auto right = outgoing(rhs);
  constexpr std::size_t unmapped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> forward(n, unmapped), backward(n, unmapped);
  std::deque<std::size_t> queue{lhs.initial};
  forward[lhs.initial] = rhs.initial;
  backward[rhs.initial] = lhs.initial;
  std::size_t mapped = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    const std::size_t y = forward[x];
    if (lhs.final[x] != rhs.final[y] || left[x].size() != right[y].size()) return false;
    for (const auto& [label, target] : left[x]) {
      const auto it = right[y].find(label);
      if (it == right[y].end()) return false;
      if (forward[target] == unmapped && backward[it->second] == unmapped) {
        forward[target] = it->second;
        backward[it->second] = target;
        ++mapped;
        queue.push_back(target);
      } else if (forward[target] != it->second) {
        return false;
      }
    }
  }
  return mapped == n;
}

Automaton to_automaton(const CompactGraph& g) {
  Automaton aut;
  aut.initial = 0;
  for (const auto& v : g.vertices) aut.final.push_back(v.final);
  for (const auto& e : g.edges) aut.transitions.push_back({e.source, e.target, g.label_word(e.label_index)});
  return aut;
}

Automaton expand_to_automaton(const CompactGraph& g) {
  // Chain edges are exactly the non-skip ones, one per formal position.
  std::vector<const CompactGraph::Edge*> chain(g.vertices.size() > 0 ? g.vertices.size() - 1 : 0, nullptr);
  for (const auto& e : g.edges) {
    if (!e.skip) chain.at(e.source) = &e;
  }
  std::vector<std::size_t> state_of(g.vertices.size(), 0);
  for (std::size_t t = 0; t < chain.size(); ++t) {
    state_of[t + 1] = state_of[t] + g.label_word(chain[t]->label_index).size();
  }

  Automaton aut;
  aut.initial = state_of[0];
  aut.final.assign(state_of.back() + 1, false);
  for (std::size_t t = 0; t < g.vertices.size(); ++t) aut.final[state_of[t]] = g.vertices[t].final;
  for (std::size_t t = 0; t < chain.size(); ++t) {
    const BinaryWord& label = g.label_word(chain[t]->label_index);
    for (std::size_t k = 0; k < label.size(); ++k) {
      aut.transitions.push_back({state_of[t] + k, state_of[t] + k + 1, BinaryWord::letter(label[k])});
    }
  }
  for (const auto& e : g.edges) {
    if (!e.skip) continue;
    const BinaryWord& label = g.label_word(e.label_index);
    aut.transitions.push_back({state_of[e.source], state_of[e.target - 1] + 1, BinaryWord::letter(label.front())});
  }
  sort_by_endpoints(aut.transitions);
  return aut;
}

Automaton compact_automaton(const Automaton& aut) {
  if (!is_deterministic(aut) || !is_homogeneous(aut)) {
    throw std::invalid_argument("compaction needs a deterministic homogeneous automaton");
  }
  std::vector<Automaton::Transition> edges = aut.transitions;
  std::vector<bool> alive(aut.state_count(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < aut.state_count(); ++v) {
      if (!alive[v] || v == aut.initial || aut.final[v]) continue;
      std::size_t out_index = edges.size();
      std::size_t out_degree = 0;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].source == v) {
          out_index = e;
          ++out_degree;
        }
      }
      if (out_degree != 1) continue;
      const Automaton::Transition out = edges[out_index];
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(out_index));
      for (auto& e : edges) {
        if (e.target == v) {
          e.target = out.target;
          e.label += out.label;
        }
      }
      alive[v] = false;
      changed = true;
    }
  }

  std::vector<std::size_t> renumber(aut.state_count(), 0);
  Automaton result;
  for (std::size_t v = 0; v < aut.state_count(); ++v) {
    if (!alive[v]) continue;
    renumber[v] = result.final.size();
    result.final.push_back(aut.final[v]);
  }
  result.initial = renumber[aut.initial];
  for (const auto& e : edges) result.transitions.push_back({renumber[e.source], renumber[e.target], e.label});
  sort_by_endpoints(result.transitions);
  return result;
}

TreeEmbedding tree_embedding(const OstrowskiSystem& sys) {
  TreeEmbedding out;
  out.directive = directive_word(sys);
  const BinaryWord& v = out.directive;
  out.nodes.push_back(BinaryWord());
  for (char x : v.view()) out.nodes.push_back(pal_closure(out.nodes.back() + BinaryWord::letter(x)));

  const std::optional<Rational> s = slope(m_word(sys));
  if (!s) throw std::logic_error("standard word without the letter a");
  out.fractions = stern_brocot_nodes(*s);
  if (out.fractions.size() != out.nodes.size()) {
    throw std::logic_error("Stern-Brocot path and directive word differ in length for " + to_string(sys));
  }

  for (std::size_t t = 0; t < v.size(); ++t) {
    const BinaryWord& upper = out.nodes[t];
    const BinaryWord& lower = out.nodes[t + 1];
    if (!upper.is_prefix_of(lower)) throw std::logic_error("tree node is not a prefix of its child");
    const Rational& from = out.fractions[t];
    const Rational& to = out.fractions[t + 1];
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Integer length = numerator(to) + denominator(to) - numerator(from) - denominator(from);
    out.edges.push_back({t, t + 1, lower.suffix(lower.size() - upper.size()), length, false});
  }
  // Every node of a run of equal letters also points just past the turn.
  for (std::size_t run_start = 0; run_start < v.size();) {
    std::size_t run_end = run_start;
    while (run_end + 1 < v.size() && v[run_end + 1] == v[run_start]) ++run_end;
    if (run_end + 1 < v.size()) {
      const TreeEmbedding::Edge into = out.edges[run_end + 1];
      for (std::size_t t = run_start; t <= run_end; ++t) {
        out.edges.push_back({t, run_end + 2, into.word_label, into.length_label, true});
      }
    }
    run_start = run_end + 1;
  }
  sort_by_endpoints(out.edges);

  const CompactGraph g = compact_graph(sys);
  std::multiset<std::tuple<std::size_t, std::size_t, BinaryWord>> by_word, expected_words;
  std::multiset<std::tuple<std::size_t, std::size_t, Integer>> by_length, expected_lengths;
  for (const auto& e : out.edges) {
    by_word.emplace(e.source, e.target, e.word_label);
    by_length.emplace(e.source, e.target, e.length_label);
  }
  for (const auto& e : g.edges) {
    expected_words.emplace(e.source, e.target, g.label_word(e.label_index));
    expected_lengths.emplace(e.source, e.target, g.label_length(e.label_index));
  }
  if (by_word != expected_words) throw std::logic_error("tree embedding differs from the compact graph");
  if (by_length != expected_lengths) throw std::logic_error("tree embedding differs from the Sturmian graph");
  return out;
}

}  // namespace christoffel
