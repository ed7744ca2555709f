#include "hsc/select.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

#include "hsc/matching.hpp"
#include "hsc/reach.hpp"

namespace hsc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_uncontrolled(const DirectedHypergraph& h) {
  if (h.num_state_edges() != h.edges().size()) {
    throw ValidationError(
        "driver selection needs an uncontrolled hypergraph; apply "
        "strip_controls first");
  }
}

// Greedy loop shared by MaG and the pure greedy baseline: repeatedly add the
// unvisited node maximizing the accessibility gain (ties to the lowest id)
// until every state node is reachable.
//
// The max-queue stays exact without re-propagating every stale candidate.
// When an evaluation's what-if cascade covers another candidate, the covered
// one is parked behind the evaluated owner with the owner's gain as an upper
// bound; covers survive commits (closures only grow), so parked candidates
// need no further work until they surface, their owner is re-evaluated to a
// larger gain, or a commit visits them outright. Raising a bound lifts the
// parked candidate's own dependents transitively, which keeps every queue
// entry at or above the candidate's true gain; bound entries that reach the
// top are evaluated exactly on the spot. Under the (gain desc, id asc) key
// the committed sequence is therefore identical to a full rescan, ties
// included.
void greedy_until_accessible(const DirectedHypergraph& h, ReachEngine& engine,
                             std::vector<NodeId>& drivers,
                             std::vector<SelectionStep>& steps) {
  const std::uint32_t n = h.num_nodes();

  struct Entry {
    std::uint32_t gain;
    NodeId node;
    std::uint64_t stamp;
    bool operator<(const Entry& o) const {
      if (gain != o.gain) return gain < o.gain;
      return node > o.node;
    }
  };
  std::priority_queue<Entry> heap;
  std::vector<std::uint64_t> latest(n, 0);
  std::vector<std::uint32_t> pushed_gain(n, 0);
  std::vector<std::uint8_t> exact(n, 0);
  std::vector<std::vector<NodeId>> deps(n);
  std::vector<NodeId> lift;
  std::uint64_t counter = 0;

  auto push_exact = [&](NodeId v, std::uint32_t g) {
    if (latest[v] != 0 && exact[v] && pushed_gain[v] == g) return;
    latest[v] = ++counter;
    pushed_gain[v] = g;
    exact[v] = 1;
    heap.push(Entry{g, v, latest[v]});
  };
  auto push_bound = [&](NodeId v, std::uint32_t b) {
    latest[v] = ++counter;
    pushed_gain[v] = b;
    exact[v] = 0;
    heap.push(Entry{b, v, latest[v]});
  };

  // Lifts every parked dependent below v to at least val. Exact entries stop
  // the walk: their own dependents were lifted when that entry was pushed.
  auto raise_deps = [&](NodeId v, std::uint32_t val) {
    lift.assign(deps[v].begin(), deps[v].end());
    while (!lift.empty()) {
      NodeId w = lift.back();
      lift.pop_back();
      if (engine.visited(w) || exact[w] || pushed_gain[w] >= val) continue;
      push_bound(w, val);
      lift.insert(lift.end(), deps[w].begin(), deps[w].end());
    }
  };

  auto eval_exact = [&](NodeId v) {
    std::uint32_t g = engine.gain(v);
    push_exact(v, g);
    raise_deps(v, g);
  };

  std::vector<NodeId> stale;
  auto process_stale = [&] {
    std::sort(stale.begin(), stale.end());
    stale.erase(std::unique(stale.begin(), stale.end()), stale.end());
    std::sort(stale.begin(), stale.end(), [&](NodeId a, NodeId b) {
      std::uint32_t ga = engine.last_gain(a);
      std::uint32_t gb = engine.last_gain(b);
      if (ga != gb) return ga > gb;
      return a < b;
    });
    engine.begin_sweep();
    for (NodeId v : stale) {
      if (engine.visited(v)) continue;
      if (latest[v] != 0 && !exact[v]) continue;  // parked behind an owner
      std::uint32_t bound;
      NodeId owner;
      if (!engine.gain_cached(v) && engine.dominated(v, &bound, &owner)) {
        push_bound(v, bound);
        deps[owner].push_back(v);
        raise_deps(v, bound);
      } else {
        eval_exact(v);
      }
    }
  };

  for (NodeId v = 0; v < n; ++v) {
    if (!engine.visited(v)) stale.push_back(v);
  }
  process_stale();

  while (engine.accessible_count() < n) {
    Entry top = heap.top();
    heap.pop();
    if (engine.visited(top.node) || top.stamp != latest[top.node]) continue;
    if (!exact[top.node]) {
      eval_exact(top.node);
      continue;
    }
    drivers.push_back(top.node);
    steps.push_back(SelectionStep{top.node, top.gain});
    engine.commit(top.node);
    stale.clear();
    engine.drain_stale(stale);
    process_stale();
  }
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::kMatching: return "matching";
    case Method::kGreedy: return "greedy";
    case Method::kMag: return "mag";
    case Method::kOptimal: return "optimal";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  if (name == "matching") return Method::kMatching;
  if (name == "greedy") return Method::kGreedy;
  if (name == "mag") return Method::kMag;
  if (name == "optimal") return Method::kOptimal;
  throw ValidationError("unknown method \"" + name +
                        "\"; expected matching|greedy|mag|optimal");
}

VerifyResult verify_structural_controllability(
    const DirectedHypergraph& h, const std::vector<NodeId>& drivers) {
  VerifyResult r;
  r.odd_order = (h.order() % 2) != 0;
  r.inaccessible = inaccessible_set(h, drivers);
  r.accessibility_ok = r.inaccessible.empty();
  Matching m = driver_matching(h, drivers);
  r.uncovered = std::move(m.uncovered);
  r.dilation_free = r.uncovered.empty();
  r.controllable = r.accessibility_ok && r.dilation_free;
  return r;
}

SelectionResult select_matching_only(const DirectedHypergraph& h) {
  auto start = Clock::now();
  require_uncontrolled(h);
  LowerBound lb = matching_lower_bound(h);
  SelectionResult res;
  res.method = Method::kMatching;
  res.drivers = lb.uncovered;
  res.lower_bound = lb.count;
  res.controllable = verify_structural_controllability(h, res.drivers).controllable;
  res.runtime_ms = ms_since(start);
  return res;
}

SelectionResult select_mag(const DirectedHypergraph& h) {
  auto start = Clock::now();
  require_uncontrolled(h);
  LowerBound lb = matching_lower_bound(h);
  SelectionResult res;
  res.method = Method::kMag;
  res.lower_bound = lb.count;
  res.drivers = lb.uncovered;

  ReachEngine engine(h);
  engine.reset(res.drivers);
  greedy_until_accessible(h, engine, res.drivers, res.steps);
  std::sort(res.drivers.begin(), res.drivers.end());
  res.controllable = verify_structural_controllability(h, res.drivers).controllable;
  res.runtime_ms = ms_since(start);
  return res;
}

SelectionResult select_greedy(const DirectedHypergraph& h) {
  auto start = Clock::now();
  require_uncontrolled(h);
  SelectionResult res;
  res.method = Method::kGreedy;
  res.lower_bound = matching_lower_bound(h).count;

  ReachEngine engine(h);
  greedy_until_accessible(h, engine, res.drivers, res.steps);
  std::sort(res.drivers.begin(), res.drivers.end());

  // Accessibility holds; repair any remaining dilation with the matching's
  // uncovered nodes until the verifier passes.
  while (true) {
    Matching m = driver_matching(h, res.drivers);
    if (m.uncovered.empty()) break;
    for (NodeId v : m.uncovered) {
      res.drivers.push_back(v);
      res.steps.push_back(SelectionStep{v, 0});
    }
    std::sort(res.drivers.begin(), res.drivers.end());
  }
  res.controllable = verify_structural_controllability(h, res.drivers).controllable;
  res.runtime_ms = ms_since(start);
  return res;
}

SelectionResult select_optimal_bfs(const DirectedHypergraph& h,
                                   std::uint32_t max_n) {
  auto start = Clock::now();
  require_uncontrolled(h);
  const std::uint32_t n = h.num_nodes();
  if (n > max_n) {
    throw CapacityError("exact driver search enumerates 2^n subsets; n = " +
                        std::to_string(n) + " exceeds the cap of " +
                        std::to_string(max_n));
  }
  SelectionResult res;
  res.method = Method::kOptimal;
  res.lower_bound = matching_lower_bound(h).count;

  std::vector<NodeId> comb;
  for (std::uint32_t size = 0; size <= n; ++size) {
    comb.resize(size);
    for (std::uint32_t i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      if (verify_structural_controllability(h, comb).controllable) {
        res.drivers = comb;
        res.controllable = true;
        res.runtime_ms = ms_since(start);
        return res;
      }
      if (size == 0) break;
      std::int64_t i = static_cast<std::int64_t>(size) - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < size; ++j)
        comb[j] = comb[j - 1] + 1;
    }
  }
  // Unreachable: the full node set always verifies.
  res.drivers.resize(n);
  for (NodeId v = 0; v < n; ++v) res.drivers[v] = v;
  res.controllable = true;
  res.runtime_ms = ms_since(start);
  return res;
}

SelectionResult run_selection(const DirectedHypergraph& h, Method method) {
  switch (method) {
    case Method::kMatching: return select_matching_only(h);
    case Method::kGreedy: return select_greedy(h);
    case Method::kMag: return select_mag(h);
    case Method::kOptimal: return select_optimal_bfs(h);
  }
  throw ValidationError("unknown method");
}

}  // namespace hsc
