#include "hsc/reach.hpp"

#include <algorithm>
#include <queue>

namespace hsc {

namespace {

// Distinct tail nodes of an edge (tail is sorted).
template <typename Fn>
void for_each_distinct_tail(const Hyperedge& e, Fn&& fn) {
  NodeId prev = UINT32_MAX;
  for (NodeId v : e.tail) {
    if (v != prev) fn(v);
    prev = v;
  }
}

void check_seeds(const DirectedHypergraph& h, const std::vector<NodeId>& seeds) {
  for (NodeId v : seeds) {
    if (v >= h.num_nodes()) {
      throw ValidationError("seed node id " + std::to_string(v + 1) +
                            " out of range (n = " + std::to_string(h.num_nodes()) + ")");
    }
  }
}

}  // namespace

bool ReachResult::contains(NodeId v) const {
  return std::binary_search(accessible.begin(), accessible.end(), v);
}

ReachResult walk_reach(const DirectedHypergraph& h,
                       const std::vector<NodeId>& seeds, bool record_trace) {
  check_seeds(h, seeds);
  const std::uint32_t n = h.num_nodes();
  const std::uint32_t total = n + h.num_controls();
  const auto& edges = h.edges();

  std::vector<std::uint8_t> visited(total, 0);
  std::vector<std::uint32_t> remaining(edges.size());
  std::vector<std::vector<EdgeId>> incident(total);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    std::uint32_t distinct = 0;
    for_each_distinct_tail(edges[e], [&](NodeId v) {
      ++distinct;
      incident[v].push_back(e);
    });
    remaining[e] = distinct;
  }

  // Min-heap so simultaneously enabled edges activate in ascending id.
  std::priority_queue<EdgeId, std::vector<EdgeId>, std::greater<EdgeId>> ready;
  ReachResult res;
  std::vector<NodeId> newly;

  auto visit = [&](NodeId v) {
    if (visited[v]) return;
    visited[v] = 1;
    if (v < n) newly.push_back(v);
    for (EdgeId e : incident[v]) {
      if (--remaining[e] == 0) ready.push(e);
    }
  };

  for (NodeId v : seeds) visit(v);
  for (std::uint32_t j = 0; j < h.num_controls(); ++j) visit(n + j);

  if (record_trace) res.frontier_trace.push_back(newly);
  std::vector<NodeId> accessible = newly;
  newly.clear();

  std::uint32_t step = 0;
  while (!ready.empty()) {
    EdgeId e = ready.top();
    ready.pop();
    ++step;
    res.activation_order.push_back(Activation{e, step});
    for (NodeId w : edges[e].head) visit(w);
    if (record_trace) res.frontier_trace.push_back(newly);
    accessible.insert(accessible.end(), newly.begin(), newly.end());
    newly.clear();
  }

  std::sort(accessible.begin(), accessible.end());
  res.accessible = std::move(accessible);
  return res;
}

std::vector<NodeId> inaccessible_set(const DirectedHypergraph& h,
                                     const std::vector<NodeId>& seeds) {
  ReachResult r = walk_reach(h, seeds);
  std::vector<NodeId> out;
  out.reserve(h.num_nodes() - r.accessible.size());
  std::size_t i = 0;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    if (i < r.accessible.size() && r.accessible[i] == v) {
      ++i;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

bool target_accessible(const DirectedHypergraph& h,
                       const std::vector<NodeId>& seeds,
                       const std::vector<NodeId>& targets) {
  check_seeds(h, targets);
  ReachResult r = walk_reach(h, seeds);
  return std::all_of(targets.begin(), targets.end(),
                     [&](NodeId t) { return r.contains(t); });
}

ReachEngine::ReachEngine(const DirectedHypergraph& h) : h_(h) {
  n_ = h.num_nodes();
  total_nodes_ = n_ + h.num_controls();
  const auto& edges = h.edges();

  tail_size_.assign(edges.size(), 0);
  std::vector<std::uint32_t> deg(total_nodes_ + 1, 0);
  for (const auto& e : edges) {
    for_each_distinct_tail(e, [&](NodeId v) { ++deg[v + 1]; });
  }
  inc_off_.assign(total_nodes_ + 1, 0);
  for (std::uint32_t v = 0; v < total_nodes_; ++v)
    inc_off_[v + 1] = inc_off_[v] + deg[v + 1];
  inc_.resize(inc_off_.back());
  std::vector<std::uint32_t> cursor(inc_off_.begin(), inc_off_.end() - 1);
  head_off_.assign(edges.size() + 1, 0);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    std::uint32_t distinct = 0;
    for_each_distinct_tail(edges[e], [&](NodeId v) {
      inc_[cursor[v]++] = e;
      ++distinct;
    });
    tail_size_[e] = distinct;
    head_off_[e + 1] = head_off_[e] + static_cast<std::uint32_t>(edges[e].head.size());
  }
  heads_.resize(head_off_.back());
  for (EdgeId e = 0; e < edges.size(); ++e) {
    std::copy(edges[e].head.begin(), edges[e].head.end(),
              heads_.begin() + head_off_[e]);
  }

  node_watch_.resize(total_nodes_);
  edge_watch_.resize(edges.size());
  reset({});
}

void ReachEngine::reset(const std::vector<NodeId>& seeds) {
  check_seeds(h_, seeds);
  visited_.assign(total_nodes_, 0);
  remaining_ = tail_size_;
  accessible_count_ = 0;
  cand_epoch_.assign(n_, 0);
  cand_gain_.assign(n_, 0);
  cand_valid_.assign(n_, 0);
  cand_heavy_.assign(n_, 0);
  sweep_epoch_.assign(n_, 0);
  sweep_gain_.assign(n_, 0);
  sweep_owner_.assign(n_, 0);
  sweep_id_ = 0;
  dirty_.clear();
  heavy_.clear();
  for (auto& w : node_watch_) w.clear();
  for (auto& w : edge_watch_) w.clear();
  edge_seen_.assign(h_.edges().size(), 0);
  eval_id_ = 0;

  // Control nodes are visited from the start; edges whose whole distinct
  // tail is control nodes (control edges) fire here and seed their heads.
  for (std::uint32_t j = n_; j < total_nodes_; ++j) {
    if (!visited_[j]) propagate(j, false);
  }
  for (NodeId v : seeds) {
    if (!visited_[v]) propagate(v, false);
  }
}

std::uint32_t ReachEngine::propagate(NodeId start, bool journal) {
  std::uint32_t gained = 0;
  stack_.clear();
  stack_.push_back(start);
  while (!stack_.empty()) {
    NodeId u = stack_.back();
    stack_.pop_back();
    if (visited_[u]) continue;
    visited_[u] = 1;
    if (u < n_) ++gained;
    if (journal) {
      journal_nodes_.push_back(u);
    } else {
      invalidate_node(u);
    }
    for (std::uint32_t i = inc_off_[u]; i < inc_off_[u + 1]; ++i) {
      EdgeId e = inc_[i];
      if (journal && edge_seen_[e] != eval_id_) {
        edge_seen_[e] = eval_id_;
        journal_edges_.emplace_back(e, remaining_[e]);
      }
      if (!journal) invalidate_edge(e);
      if (--remaining_[e] == 0) {
        for (std::uint32_t hIdx = head_off_[e]; hIdx < head_off_[e + 1]; ++hIdx) {
          NodeId w = heads_[hIdx];
          if (!visited_[w]) stack_.push_back(w);
        }
      }
    }
  }
  if (!journal) accessible_count_ += gained;
  return gained;
}

void ReachEngine::rollback() {
  for (auto it = journal_edges_.rbegin(); it != journal_edges_.rend(); ++it) {
    remaining_[it->first] = it->second;
  }
  for (NodeId u : journal_nodes_) visited_[u] = 0;
}

void ReachEngine::invalidate_node(NodeId u) {
  auto& lst = node_watch_[u];
  for (const Watch& w : lst) {
    if (w.epoch == cand_epoch_[w.cand] && cand_valid_[w.cand]) {
      cand_valid_[w.cand] = 0;
      dirty_.push_back(w.cand);
    }
  }
  lst.clear();
}

void ReachEngine::invalidate_edge(EdgeId e) {
  auto& lst = edge_watch_[e];
  for (const Watch& w : lst) {
    if (w.epoch == cand_epoch_[w.cand] && cand_valid_[w.cand]) {
      cand_valid_[w.cand] = 0;
      dirty_.push_back(w.cand);
    }
  }
  lst.clear();
}

std::uint32_t ReachEngine::gain(NodeId v) {
  if (visited_[v]) return 0;
  if (cand_valid_[v]) return cand_gain_[v];

  journal_nodes_.clear();
  journal_edges_.clear();
  ++eval_id_;
  std::uint32_t gained = propagate(v, true);
  if (sweep_id_ != 0) {
    for (NodeId u : journal_nodes_) {
      if (u < n_ && u != v) {
        sweep_epoch_[u] = sweep_id_;
        sweep_gain_[u] = gained;
        sweep_owner_[u] = v;
      }
    }
  }

  std::uint32_t epoch = ++cand_epoch_[v];
  if (journal_nodes_.size() + journal_edges_.size() <= kWatchCap) {
    for (NodeId u : journal_nodes_) node_watch_[u].push_back({v, epoch});
    for (const auto& [e, cnt] : journal_edges_) {
      // An activated edge cannot move again without one of its tail nodes
      // being visited first, and those are all watched above; only the
      // partially decremented counters need their own guard.
      if (remaining_[e] != 0) edge_watch_[e].push_back({v, epoch});
    }
    cand_valid_[v] = 1;
  } else if (!cand_heavy_[v]) {
    // Too costly to watch precisely; re-evaluated every round instead.
    cand_heavy_[v] = 1;
    heavy_.push_back(v);
  }
  cand_gain_[v] = gained;
  rollback();
  return gained;
}

void ReachEngine::commit(NodeId v) {
  if (visited_[v]) return;
  propagate(v, false);
}

void ReachEngine::drain_stale(std::vector<NodeId>& out) {
  for (NodeId v : dirty_) {
    if (!visited_[v] && !cand_valid_[v]) out.push_back(v);
  }
  dirty_.clear();
  std::size_t alive = 0;
  for (NodeId v : heavy_) {
    if (visited_[v]) continue;
    heavy_[alive++] = v;
    if (!cand_valid_[v]) out.push_back(v);
  }
  heavy_.resize(alive);
}

}  // namespace hsc
