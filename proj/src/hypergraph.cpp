#include "hsc/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hsc {

namespace {

void check_range(NodeId v, std::uint32_t n, const char* what) {
  if (v >= n) {
    throw ValidationError(std::string(what) + " id " + std::to_string(v + 1) +
                          " out of range (n = " + std::to_string(n) + ")");
  }
}

bool edge_less(const Hyperedge& a, const Hyperedge& b) {
  if (a.is_control != b.is_control) return !a.is_control;
  if (a.head.front() != b.head.front()) return a.head.front() < b.head.front();
  if (a.head != b.head) return a.head < b.head;
  return a.tail < b.tail;
}

}  // namespace

void canonicalize_pattern(SparsityPattern& p) {
  if (p.k < 2) throw ValidationError("order k must be at least 2");
  for (auto& tup : p.nonzeros_a) {
    if (tup.size() != p.k) {
      throw ValidationError("A tuple length " + std::to_string(tup.size()) +
                            " does not match k = " + std::to_string(p.k));
    }
    for (NodeId v : tup) check_range(v, p.n, "state node");
  }
  for (auto& [row, input] : p.nonzeros_b) {
    check_range(row, p.n, "state node");
    check_range(input, p.m, "control input");
  }
  std::sort(p.nonzeros_a.begin(), p.nonzeros_a.end());
  p.nonzeros_a.erase(std::unique(p.nonzeros_a.begin(), p.nonzeros_a.end()),
                     p.nonzeros_a.end());
  std::sort(p.nonzeros_b.begin(), p.nonzeros_b.end());
  p.nonzeros_b.erase(std::unique(p.nonzeros_b.begin(), p.nonzeros_b.end()),
                     p.nonzeros_b.end());
}

DirectedHypergraph DirectedHypergraph::from_edges(
    std::uint32_t n, std::uint32_t k, std::vector<Hyperedge> state_edges,
    const std::vector<std::pair<NodeId, NodeId>>& controls) {
  if (k < 2) throw ValidationError("order k must be at least 2");
  DirectedHypergraph h;
  h.n_ = n;
  h.k_ = k;

  for (auto& e : state_edges) {
    if (e.head.empty()) throw ValidationError("hyperedge head is empty");
    if (e.tail.size() != k - 1) {
      throw ValidationError("hyperedge tail has " +
                            std::to_string(e.tail.size()) + " entries, expected " +
                            std::to_string(k - 1));
    }
    for (NodeId v : e.head) check_range(v, n, "head node");
    for (NodeId v : e.tail) check_range(v, n, "tail node");
    std::sort(e.head.begin(), e.head.end());
    e.head.erase(std::unique(e.head.begin(), e.head.end()), e.head.end());
    std::sort(e.tail.begin(), e.tail.end());
    e.is_control = false;
  }

  std::uint32_t m = 0;
  for (const auto& [node, input] : controls) {
    check_range(node, n, "state node");
    m = std::max(m, input + 1);
  }
  h.m_ = m;

  std::sort(state_edges.begin(), state_edges.end(), edge_less);
  state_edges.erase(std::unique(state_edges.begin(), state_edges.end()),
                    state_edges.end());
  h.num_state_edges_ = static_cast<std::uint32_t>(state_edges.size());
  h.edges_ = std::move(state_edges);

  std::vector<Hyperedge> ctrl;
  ctrl.reserve(controls.size());
  for (const auto& [node, input] : controls) {
    ctrl.push_back(Hyperedge{{node}, {n + input}, true});
  }
  std::sort(ctrl.begin(), ctrl.end(), edge_less);
  ctrl.erase(std::unique(ctrl.begin(), ctrl.end()), ctrl.end());
  h.edges_.insert(h.edges_.end(), ctrl.begin(), ctrl.end());
  return h;
}

DirectedHypergraph build_hypergraph(const SparsityPattern& p) {
  SparsityPattern canon = p;
  canonicalize_pattern(canon);
  std::set<std::pair<std::vector<NodeId>, std::vector<NodeId>>> classes;
  for (const auto& tup : canon.nonzeros_a) {
    std::vector<NodeId> head{tup.front()};
    std::vector<NodeId> tail(tup.begin() + 1, tup.end());
    std::sort(tail.begin(), tail.end());
    classes.emplace(std::move(head), std::move(tail));
  }
  std::vector<Hyperedge> edges;
  edges.reserve(classes.size());
  for (const auto& [head, tail] : classes) edges.push_back(Hyperedge{head, tail, false});
  return DirectedHypergraph::from_edges(canon.n, canon.k, std::move(edges),
                                        canon.nonzeros_b);
}

SparsityPattern pattern_from_hypergraph(const DirectedHypergraph& h) {
  SparsityPattern p;
  p.n = h.num_nodes();
  p.k = h.order();
  p.m = h.num_controls();
  for (const auto& e : h.edges()) {
    if (e.is_control) {
      p.nonzeros_b.emplace_back(e.head.front(), e.tail.front() - h.num_nodes());
      continue;
    }
    // A multi-node head stands for one tensor row per head node over the
    // same tail tuples.
    std::vector<NodeId> tail = e.tail;  // sorted; enumerate distinct orders
    do {
      for (NodeId hn : e.head) {
        std::vector<NodeId> tup;
        tup.reserve(p.k);
        tup.push_back(hn);
        tup.insert(tup.end(), tail.begin(), tail.end());
        p.nonzeros_a.push_back(std::move(tup));
      }
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  canonicalize_pattern(p);
  return p;
}

DirectedHypergraph strip_controls(const DirectedHypergraph& h) {
  std::vector<Hyperedge> state(h.edges().begin(),
                               h.edges().begin() + h.num_state_edges());
  return DirectedHypergraph::from_edges(h.num_nodes(), h.order(),
                                        std::move(state));
}

DirectedHypergraph with_drivers(const DirectedHypergraph& h,
                                const std::vector<NodeId>& drivers) {
  std::vector<Hyperedge> state(h.edges().begin(),
                               h.edges().begin() + h.num_state_edges());
  std::vector<std::pair<NodeId, NodeId>> controls;
  for (std::uint32_t i = h.num_state_edges(); i < h.edges().size(); ++i) {
    const auto& e = h.edges()[i];
    controls.emplace_back(e.head.front(), e.tail.front() - h.num_nodes());
  }
  std::set<NodeId> seen;
  NodeId next_input = h.num_controls();
  for (NodeId d : drivers) {
    check_range(d, h.num_nodes(), "driver node");
    if (seen.insert(d).second) controls.emplace_back(d, next_input++);
  }
  return DirectedHypergraph::from_edges(h.num_nodes(), h.order(),
                                        std::move(state), controls);
}

std::size_t StarExpansion::arc_count() const {
  std::size_t total = 0;
  for (const auto& a : tail_arcs) total += a.size();
  for (const auto& a : head_arcs) total += a.size();
  return total;
}

StarExpansion star_expand(const DirectedHypergraph& h) {
  StarExpansion s;
  s.num_nodes = h.num_nodes();
  s.num_edges = static_cast<std::uint32_t>(h.edges().size());
  s.tail_arcs.resize(s.num_nodes);
  s.head_arcs.resize(s.num_edges);
  for (EdgeId e = 0; e < s.num_edges; ++e) {
    const auto& edge = h.edges()[e];
    s.head_arcs[e] = edge.head;
    NodeId prev = UINT32_MAX;
    for (NodeId v : edge.tail) {
      if (v == prev || v >= h.num_nodes()) continue;  // dedupe; skip control tails
      s.tail_arcs[v].push_back(e);
      prev = v;
    }
  }
  return s;
}

Digraph projection_digraph(const DirectedHypergraph& h) {
  Digraph g;
  g.n = h.num_nodes();
  std::vector<std::set<NodeId>> out(g.n);
  for (std::uint32_t i = 0; i < h.num_state_edges(); ++i) {
    const auto& e = h.edges()[i];
    for (NodeId u : e.tail)
      for (NodeId w : e.head) out[u].insert(w);
  }
  g.out.resize(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v)
    g.out[v].assign(out[v].begin(), out[v].end());
  return g;
}

}  // namespace hsc
