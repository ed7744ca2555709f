#pragma once

#include "hsc/hypergraph.hpp"

// Small hand-built systems shared across tests.
namespace hsc::testing {

// Three nodes, order 4: node 0 feeds node 1 through one cubic edge and
// node 2 through a mixed edge. Driving node 0 controls everything.
inline DirectedHypergraph example_pair() {
  return DirectedHypergraph::from_edges(
      3, 4,
      {Hyperedge{{1}, {0, 0, 0}, false}, Hyperedge{{2}, {0, 1, 1}, false}});
}

// Same shape but the single edge feeds both remaining nodes at once, which
// a single head matching cannot cover.
inline DirectedHypergraph multi_head_pair() {
  return DirectedHypergraph::from_edges(3, 4,
                                        {Hyperedge{{1, 2}, {0, 0, 0}, false}});
}

// Straight cubic relay 0 -> 1 -> 2.
inline DirectedHypergraph chain3() {
  return DirectedHypergraph::from_edges(
      3, 4,
      {Hyperedge{{1}, {0, 0, 0}, false}, Hyperedge{{2}, {1, 1, 1}, false}});
}

// Two edges with the same tail: the rows of nodes 1 and 2 are multiples of
// one monomial, so c2*x1 - c1*x2 is conserved for every realization. The
// structural tests pass with node 0 driven, yet no realization ever reaches
// full numeric rank. Documents a genericity boundary of the rank criterion.
inline DirectedHypergraph sibling_tails() {
  return DirectedHypergraph::from_edges(
      3, 4,
      {Hyperedge{{1}, {0, 0, 0}, false}, Hyperedge{{2}, {0, 0, 0}, false}});
}

// Three edges whose heads pairwise overlap in {0, 1}. With drivers 2..6 the
// head matching covers all eight nodes, but S = {0, 1} meets every head in
// the same set {0, 1}: one distinct signal for two nodes. The matching test
// and the exact scan disagree here.
inline DirectedHypergraph head_triple() {
  return DirectedHypergraph::from_edges(8, 4,
                                        {Hyperedge{{0, 1, 5}, {2, 3, 4}, false},
                                         Hyperedge{{0, 1, 6}, {2, 3, 4}, false},
                                         Hyperedge{{0, 1, 7}, {2, 3, 4}, false}});
}

inline std::vector<NodeId> head_triple_drivers() { return {2, 3, 4, 5, 6}; }

}  // namespace hsc::testing
