#pragma once

#include <string>
#include <vector>

#include "hsc/hypergraph.hpp"

namespace hsc {

enum class Method { kMatching, kGreedy, kMag, kOptimal };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct VerifyResult {
  bool controllable = false;
  bool accessibility_ok = false;
  bool dilation_free = false;
  std::vector<NodeId> inaccessible;  // sorted
  std::vector<NodeId> uncovered;     // matching-uncovered nodes when dilated
  // k odd means even-degree dynamics: the certificate then speaks to strong
  // accessibility rather than controllability.
  bool odd_order = false;
};

// Certifies the driver set: every state node must be reachable and the
// head matching of h plus driver control edges must cover every state node.
// Existing control edges of h participate in both checks.
VerifyResult verify_structural_controllability(const DirectedHypergraph& h,
                                               const std::vector<NodeId>& drivers);

struct SelectionStep {
  NodeId node;
  std::uint32_t gain;  // accessible nodes added by this pick

  bool operator==(const SelectionStep&) const = default;
};

struct SelectionResult {
  Method method = Method::kMatching;
  std::vector<NodeId> drivers;       // sorted
  std::uint32_t lower_bound = 0;     // matching bound of the uncontrolled input
  bool controllable = false;
  double runtime_ms = 0.0;
  std::vector<SelectionStep> steps;  // greedy picks in order, when applicable
};

// All selectors require an uncontrolled hypergraph.

// Drivers = matching-uncovered nodes only. May return an uncontrollable set;
// the controllable flag reports the verifier's verdict.
SelectionResult select_matching_only(const DirectedHypergraph& h);

// Matching-uncovered seed set, then greedy accessibility repair: while some
// node is unreachable, add the inaccessible node whose addition reaches the
// most nodes (ties to the lowest id). Always returns a controllable set.
SelectionResult select_mag(const DirectedHypergraph& h);

// Pure greedy baseline: grows from the empty set by accessibility gain, then
// repairs remaining dilations with matching-uncovered nodes until the
// verifier passes.
SelectionResult select_greedy(const DirectedHypergraph& h);

// Exact minimum driver set by subset enumeration (cardinality, then
// lexicographic; the first verified set wins). Throws CapacityError when n
// exceeds max_n.
SelectionResult select_optimal_bfs(const DirectedHypergraph& h,
                                   std::uint32_t max_n = 12);

SelectionResult run_selection(const DirectedHypergraph& h, Method method);

}  // namespace hsc
