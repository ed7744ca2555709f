#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hsc/types.hpp"

namespace hsc {

// One directed hyperedge. head is a sorted set of state nodes, tail a sorted
// multiset (multiplicity kept). A state edge of a k-th order system has
// exactly k-1 tail entries, all state nodes. A control edge has one head
// (the actuated state node) and one tail entry, which is a control node.
struct Hyperedge {
  std::vector<NodeId> head;
  std::vector<NodeId> tail;
  bool is_control = false;

  bool operator==(const Hyperedge&) const = default;
};

// Nonzero layout of the pair (A, B) for x' = A x^{k-1} + B u. Each entry of
// nonzeros_a is a k-tuple of state indices, head index first; entries of
// nonzeros_b are (row, input) pairs. Tuples are stored sorted and deduped.
struct SparsityPattern {
  std::uint32_t n = 0;
  std::uint32_t k = 2;
  std::uint32_t m = 0;  // number of control inputs
  std::vector<std::vector<NodeId>> nonzeros_a;
  std::vector<std::pair<NodeId, NodeId>> nonzeros_b;
};

// Throws ValidationError unless indices are in range, every A tuple has
// length k and k >= 2. Sorts and dedupes the support in place.
void canonicalize_pattern(SparsityPattern& p);

// Directed hypergraph over n state nodes and m control nodes. Edges are
// stored canonically: state edges first, sorted by (min head, head, tail),
// then control edges sorted by (head, tail); exact duplicates are merged.
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;

  // Validates and canonicalizes. controls holds (state node, input) pairs;
  // inputs are 0-based and m is taken as max input + 1.
  static DirectedHypergraph from_edges(std::uint32_t n, std::uint32_t k,
                                       std::vector<Hyperedge> state_edges,
                                       const std::vector<std::pair<NodeId, NodeId>>& controls = {});

  std::uint32_t num_nodes() const { return n_; }
  std::uint32_t num_controls() const { return m_; }
  std::uint32_t order() const { return k_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::uint32_t num_state_edges() const { return num_state_edges_; }

  // Control node id for input j.
  NodeId control_node(NodeId input) const { return n_ + input; }

  bool operator==(const DirectedHypergraph&) const = default;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t k_ = 2;
  std::uint32_t m_ = 0;
  std::uint32_t num_state_edges_ = 0;
  std::vector<Hyperedge> edges_;
};

// One state hyperedge per equivalence class of A tuples under permutation of
// the k-1 tail positions; one control edge per B nonzero.
DirectedHypergraph build_hypergraph(const SparsityPattern& p);

// Inverse of build_hypergraph on single-head hypergraphs: every state edge
// expands to all distinct tail permutations. A multi-node head contributes
// one tensor row per head node, so build_hypergraph(pattern_from_hypergraph(h))
// splits such edges.
SparsityPattern pattern_from_hypergraph(const DirectedHypergraph& h);

// Copy without control edges or control nodes.
DirectedHypergraph strip_controls(const DirectedHypergraph& h);

// Copy with one extra control edge per listed driver (fresh inputs appended
// after the existing ones). Drivers must be state nodes; duplicates merge.
DirectedHypergraph with_drivers(const DirectedHypergraph& h,
                                const std::vector<NodeId>& drivers);

// Bipartite star expansion: state nodes on one side, hyperedges on the
// other. tail_arcs[v] lists edges with v in the distinct tail; head_arcs[e]
// lists the head nodes of e. Control-node tails have no left node and thus
// no tail arc. Adjacency lists are sorted ascending.
struct StarExpansion {
  std::uint32_t num_nodes = 0;
  std::uint32_t num_edges = 0;
  std::vector<std::vector<EdgeId>> tail_arcs;
  std::vector<std::vector<NodeId>> head_arcs;

  std::size_t arc_count() const;
};

StarExpansion star_expand(const DirectedHypergraph& h);

// Simple digraph with sorted, deduped adjacency.
struct Digraph {
  std::uint32_t n = 0;
  std::vector<std::vector<NodeId>> out;
};

// Tail-to-head reachability projection over state edges: arc (u, w) whenever
// some state edge has u in its tail and w in its head. Multiplicity
// collapses; self-loops kept.
Digraph projection_digraph(const DirectedHypergraph& h);

}  // namespace hsc
