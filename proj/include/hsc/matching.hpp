#pragma once

#include <optional>
#include <vector>

#include "hsc/hypergraph.hpp"

namespace hsc {

struct Matching {
  std::vector<std::pair<EdgeId, NodeId>> pairs;  // matched (hyperedge, node)
  std::vector<NodeId> uncovered;                 // unmatched state nodes, sorted

  std::size_t size() const { return pairs.size(); }
};

// Maximum matching from hyperedges to state nodes along head arcs
// (Hopcroft-Karp). Deterministic under the fixed id ordering: layers and
// augmenting paths are explored in ascending id order.
Matching maximum_matching(const StarExpansion& s);

struct LowerBound {
  std::uint32_t count = 0;          // n - |maximum matching|
  std::vector<NodeId> uncovered;    // a witness uncovered set, sorted
};

// Minimum number of control nodes needed, with an uncovered witness set.
// Edges with identical head sets are deduplicated before matching, since
// they contribute a single distinct head set. h must have no control edges;
// use strip_controls first if it does.
LowerBound matching_lower_bound(const DirectedHypergraph& h);

// Maximum head matching of h plus one control edge per driver, with head-set
// deduplication. The uncovered field is the dilation witness used by the
// verifier.
Matching driver_matching(const DirectedHypergraph& h,
                         const std::vector<NodeId>& drivers);

// Matching-based dilation test on h plus one control edge per driver: true
// when no head matching covers every state node. This is the normative test
// used by the selectors and the verifier.
bool has_dilation_matching(const DirectedHypergraph& h,
                           const std::vector<NodeId>& drivers);

struct DilationWitness {
  std::vector<NodeId> nodes;            // the dilation set S, sorted
  std::uint32_t distinct_heads = 0;     // distinct non-empty S-head intersections
};

// Exhaustive dilation scan: the first S (by cardinality, then
// lexicographic) whose count of distinct head intersections is below |S|,
// over state edges, control edges and driver singleton heads. Exact but
// exponential; throws CapacityError when n exceeds max_n.
std::optional<DilationWitness> find_dilation_exact(
    const DirectedHypergraph& h, const std::vector<NodeId>& drivers,
    std::uint32_t max_n = 20);

// Cross-check of the two dilation tests. The matching test can miss
// dilations made of partially overlapping head sets; disagreements are
// reported with the exact witness, never reconciled.
struct DilationDiscrepancy {
  bool matching_has_dilation = false;
  DilationWitness exact_witness;
};

std::optional<DilationDiscrepancy> dilation_discrepancy(
    const DirectedHypergraph& h, const std::vector<NodeId>& drivers,
    std::uint32_t max_n = 20);

}  // namespace hsc
