#pragma once

#include <vector>

#include "hsc/hypergraph.hpp"

namespace hsc {

struct Activation {
  EdgeId edge;
  std::uint32_t step;  // 1-based position in the activation sequence

  bool operator==(const Activation&) const = default;
};

struct ReachResult {
  std::vector<NodeId> accessible;          // sorted state nodes
  std::vector<Activation> activation_order;
  // frontier_trace[0] holds the seeds; frontier_trace[j] the state nodes
  // first visited by activation j. Only filled when requested.
  std::vector<std::vector<NodeId>> frontier_trace;

  bool contains(NodeId v) const;
};

// Forward closure of the seed set. A state edge activates once every
// distinct tail node has been visited, which then visits all of its head
// nodes; control nodes count as visited from the start, so control edges of
// placed inputs activate immediately and seed their heads. Runs to the least
// fixed point; enabled edges are processed in ascending edge id.
ReachResult walk_reach(const DirectedHypergraph& h,
                       const std::vector<NodeId>& seeds,
                       bool record_trace = false);

// State nodes outside walk_reach(h, seeds).
std::vector<NodeId> inaccessible_set(const DirectedHypergraph& h,
                                     const std::vector<NodeId>& seeds);

// True when every target is reached; vacuously true for empty targets.
bool target_accessible(const DirectedHypergraph& h,
                       const std::vector<NodeId>& seeds,
                       const std::vector<NodeId>& targets);

// Incremental closure used by the greedy selectors. Keeps per-edge
// unvisited-tail counters that are resumed, not recomputed, across commits;
// gain() evaluates a what-if addition with journaled rollback and caches the
// result until a committed change touches something the evaluation read.
class ReachEngine {
 public:
  explicit ReachEngine(const DirectedHypergraph& h);

  // Re-seeds the engine: control nodes plus seeds become visited and the
  // closure is committed.
  void reset(const std::vector<NodeId>& seeds);

  std::uint32_t accessible_count() const { return accessible_count_; }
  bool visited(NodeId v) const { return visited_[v] != 0; }

  // Number of state nodes walk_reach would add if v joined the seeds.
  // Cached; cheap when nothing relevant changed since the last call.
  std::uint32_t gain(NodeId v);

  // Permanently adds v and propagates. Invalidates affected gain caches.
  void commit(NodeId v);

  // Appends every unvisited candidate whose cached gain may be out of date:
  // candidates invalidated by commits plus candidates too large to watch.
  // Drains the invalidation list; may contain duplicates.
  void drain_stale(std::vector<NodeId>& out);

  // Opens a fresh sweep: gain() evaluations from here on record which nodes
  // their what-if cascades covered.
  void begin_sweep() { ++sweep_id_; }

  // True when an evaluation in the current sweep already covered v; *bound
  // receives that evaluation's gain and *owner its start node. The covering
  // closure contains v's closure, and keeps containing it as commits grow
  // both, so gain(owner) stays an upper bound on gain(v) for the rest of the
  // run. A max-search can therefore park v behind its owner and only compute
  // the exact gain when v surfaces.
  bool dominated(NodeId v, std::uint32_t* bound, NodeId* owner) const {
    if (sweep_id_ == 0 || sweep_epoch_[v] != sweep_id_) return false;
    *bound = sweep_gain_[v];
    *owner = sweep_owner_[v];
    return true;
  }

  bool gain_cached(NodeId v) const { return cand_valid_[v] != 0; }
  // Last computed gain, possibly stale; for ordering heuristics only.
  std::uint32_t last_gain(NodeId v) const { return cand_gain_[v]; }

 private:
  std::uint32_t propagate(NodeId start, bool journal);
  void rollback();
  void invalidate_node(NodeId u);
  void invalidate_edge(EdgeId e);

  struct Watch {
    std::uint32_t cand;
    std::uint32_t epoch;
  };

  const DirectedHypergraph& h_;
  std::uint32_t n_ = 0;
  std::uint32_t total_nodes_ = 0;

  // CSR incidence: node -> edges having it in the distinct tail.
  std::vector<std::uint32_t> inc_off_;
  std::vector<EdgeId> inc_;
  std::vector<std::uint32_t> head_off_;
  std::vector<NodeId> heads_;
  std::vector<std::uint32_t> tail_size_;

  std::vector<std::uint8_t> visited_;
  std::vector<std::uint32_t> remaining_;
  std::uint32_t accessible_count_ = 0;

  // Gain cache with reverse watch lists for precise invalidation.
  std::vector<std::uint32_t> cand_epoch_;
  std::vector<std::uint32_t> cand_gain_;
  std::vector<std::uint8_t> cand_valid_;
  std::vector<std::uint8_t> cand_heavy_;
  std::vector<NodeId> dirty_;
  std::vector<NodeId> heavy_;
  std::vector<std::vector<Watch>> node_watch_;
  std::vector<std::vector<Watch>> edge_watch_;
  // Evaluations touching more items than this run unwatched and re-evaluate
  // every time; keeps watch memory linear.
  static constexpr std::size_t kWatchCap = 2048;

  // Sweep-scoped cover marks backing dominated().
  std::vector<std::uint32_t> sweep_epoch_;
  std::vector<std::uint32_t> sweep_gain_;
  std::vector<NodeId> sweep_owner_;
  std::uint32_t sweep_id_ = 0;

  // Journal of the running what-if evaluation. Edges journal their counter
  // once per evaluation (first touch), so rollback restores the original
  // value directly.
  std::vector<NodeId> journal_nodes_;
  std::vector<std::pair<EdgeId, std::uint32_t>> journal_edges_;
  std::vector<std::uint32_t> edge_seen_;
  std::uint32_t eval_id_ = 0;
  std::vector<NodeId> stack_;
};

}  // namespace hsc
