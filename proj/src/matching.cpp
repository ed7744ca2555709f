#include "hsc/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace hsc {

namespace {

constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Hopcroft-Karp over an explicit edge->node adjacency.
struct HopcroftKarp {
  const std::vector<std::vector<NodeId>>& adj;
  std::uint32_t num_left, num_right;
  std::vector<std::uint32_t> pair_left, pair_right, level;

  HopcroftKarp(const std::vector<std::vector<NodeId>>& a, std::uint32_t nr)
      : adj(a),
        num_left(static_cast<std::uint32_t>(a.size())),
        num_right(nr),
        pair_left(num_left, kNil),
        pair_right(nr, kNil),
        level(num_left, kInf) {}

  bool bfs() {
    std::queue<std::uint32_t> q;
    for (std::uint32_t u = 0; u < num_left; ++u) {
      if (pair_left[u] == kNil) {
        level[u] = 0;
        q.push(u);
      } else {
        level[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop();
      for (NodeId v : adj[u]) {
        std::uint32_t w = pair_right[v];
        if (w == kNil) {
          found = true;
        } else if (level[w] == kInf) {
          level[w] = level[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t u) {
    for (NodeId v : adj[u]) {
      std::uint32_t w = pair_right[v];
      if (w == kNil || (level[w] == level[u] + 1 && dfs(w))) {
        pair_left[u] = v;
        pair_right[v] = u;
        return true;
      }
    }
    level[u] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      for (std::uint32_t u = 0; u < num_left; ++u) {
        if (pair_left[u] == kNil) dfs(u);
      }
    }
  }
};

Matching match_from_pairs(const std::vector<std::uint32_t>& pair_right,
                          std::uint32_t num_nodes) {
  Matching m;
  for (NodeId v = 0; v < num_nodes; ++v) {
    if (pair_right[v] == kNil) {
      m.uncovered.push_back(v);
    } else {
      m.pairs.emplace_back(pair_right[v], v);
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

// Adjacency keeping one representative (lowest id) per distinct head set.
std::vector<std::vector<NodeId>> dedup_head_adjacency(
    const std::vector<std::vector<NodeId>>& head_arcs) {
  std::vector<std::vector<NodeId>> adj(head_arcs.size());
  std::map<std::vector<NodeId>, EdgeId> seen;
  for (EdgeId e = 0; e < head_arcs.size(); ++e) {
    if (seen.emplace(head_arcs[e], e).second) adj[e] = head_arcs[e];
  }
  return adj;
}

void check_drivers(const DirectedHypergraph& h, const std::vector<NodeId>& drivers) {
  for (NodeId d : drivers) {
    if (d >= h.num_nodes()) {
      throw ValidationError("driver node id " + std::to_string(d + 1) +
                            " out of range (n = " + std::to_string(h.num_nodes()) + ")");
    }
  }
}

}  // namespace

Matching maximum_matching(const StarExpansion& s) {
  HopcroftKarp hk(s.head_arcs, s.num_nodes);
  hk.run();
  return match_from_pairs(hk.pair_right, s.num_nodes);
}

LowerBound matching_lower_bound(const DirectedHypergraph& h) {
  if (h.num_controls() > 0 || h.num_state_edges() != h.edges().size()) {
    throw ValidationError(
        "matching lower bound needs an uncontrolled hypergraph; apply "
        "strip_controls first");
  }
  StarExpansion s = star_expand(h);
  auto adj = dedup_head_adjacency(s.head_arcs);
  HopcroftKarp hk(adj, s.num_nodes);
  hk.run();
  Matching m = match_from_pairs(hk.pair_right, s.num_nodes);
  LowerBound lb;
  lb.count = static_cast<std::uint32_t>(m.uncovered.size());
  lb.uncovered = std::move(m.uncovered);
  return lb;
}

Matching driver_matching(const DirectedHypergraph& h,
                         const std::vector<NodeId>& drivers) {
  check_drivers(h, drivers);
  std::vector<std::vector<NodeId>> head_arcs;
  head_arcs.reserve(h.edges().size() + drivers.size());
  for (const auto& e : h.edges()) head_arcs.push_back(e.head);
  for (NodeId d : drivers) head_arcs.push_back({d});
  auto adj = dedup_head_adjacency(head_arcs);
  HopcroftKarp hk(adj, h.num_nodes());
  hk.run();
  return match_from_pairs(hk.pair_right, h.num_nodes());
}

bool has_dilation_matching(const DirectedHypergraph& h,
                           const std::vector<NodeId>& drivers) {
  return !driver_matching(h, drivers).uncovered.empty();
}

std::optional<DilationWitness> find_dilation_exact(
    const DirectedHypergraph& h, const std::vector<NodeId>& drivers,
    std::uint32_t max_n) {
  check_drivers(h, drivers);
  const std::uint32_t n = h.num_nodes();
  if (n > max_n || n > 63) {
    throw CapacityError("exact dilation scan enumerates 2^n subsets; n = " +
                        std::to_string(n) + " exceeds the cap of " +
                        std::to_string(std::min<std::uint32_t>(max_n, 63)));
  }

  std::vector<std::uint64_t> head_masks;
  head_masks.reserve(h.edges().size() + drivers.size());
  for (const auto& e : h.edges()) {
    std::uint64_t m = 0;
    for (NodeId v : e.head) m |= 1ULL << v;
    head_masks.push_back(m);
  }
  for (NodeId d : drivers) head_masks.push_back(1ULL << d);
  std::sort(head_masks.begin(), head_masks.end());
  head_masks.erase(std::unique(head_masks.begin(), head_masks.end()),
                   head_masks.end());

  std::vector<std::uint64_t> intersections;
  std::vector<NodeId> comb;
  // Subsets by cardinality, then lexicographic on ascending node ids.
  for (std::uint32_t size = 1; size <= n; ++size) {
    comb.resize(size);
    for (std::uint32_t i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      std::uint64_t smask = 0;
      for (NodeId v : comb) smask |= 1ULL << v;
      intersections.clear();
      for (std::uint64_t hm : head_masks) {
        std::uint64_t x = hm & smask;
        if (x != 0) intersections.push_back(x);
      }
      std::sort(intersections.begin(), intersections.end());
      intersections.erase(std::unique(intersections.begin(), intersections.end()),
                          intersections.end());
      if (intersections.size() < size) {
        DilationWitness w;
        w.nodes = comb;
        w.distinct_heads = static_cast<std::uint32_t>(intersections.size());
        return w;
      }
      // Next lexicographic combination.
      std::int64_t i = static_cast<std::int64_t>(size) - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < size; ++j)
        comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<DilationDiscrepancy> dilation_discrepancy(
    const DirectedHypergraph& h, const std::vector<NodeId>& drivers,
    std::uint32_t max_n) {
  bool matching = has_dilation_matching(h, drivers);
  auto exact = find_dilation_exact(h, drivers, max_n);
  if (matching == exact.has_value()) return std::nullopt;
  DilationDiscrepancy d;
  d.matching_has_dilation = matching;
  if (exact) d.exact_witness = *exact;
  return d;
}

}  // namespace hsc
