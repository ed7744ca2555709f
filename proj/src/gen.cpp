#include "hsc/gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

#include "hsc/rng.hpp"

namespace hsc {

namespace {

void check_config(const GenConfig& cfg) {
  if (cfg.k < 2) throw ValidationError("order k must be at least 2");
  if (cfg.n < cfg.k - 1) {
    throw ValidationError("n = " + std::to_string(cfg.n) +
                          " is below k - 1 = " + std::to_string(cfg.k - 1));
  }
  if (!(cfg.alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (edge_count_for(cfg) < 1) {
    throw ValidationError("alpha * n rounds to zero edges");
  }
}

using EdgeKey = std::pair<NodeId, std::vector<NodeId>>;  // head, sorted tail

EdgeKey key_of(NodeId head, std::vector<NodeId> tail) {
  std::sort(tail.begin(), tail.end());
  return {head, std::move(tail)};
}

DirectedHypergraph assemble(const GenConfig& cfg,
                            const std::set<EdgeKey>& keys) {
  std::vector<Hyperedge> edges;
  edges.reserve(keys.size());
  for (const auto& [head, tail] : keys) {
    edges.push_back(Hyperedge{{head}, tail, false});
  }
  return DirectedHypergraph::from_edges(cfg.n, cfg.k, std::move(edges));
}

// Draws edges from `sample` until `count` distinct canonical edges exist;
// duplicates are re-sampled. on_commit fires once per accepted edge.
template <typename Sampler, typename Commit>
DirectedHypergraph fill_edges(const GenConfig& cfg, Sampler&& sample,
                              Commit&& on_commit) {
  const std::uint32_t count = edge_count_for(cfg);
  std::set<EdgeKey> keys;
  std::uint64_t attempts = 0;
  const std::uint64_t cap = 1000ULL * count + 1000ULL;
  while (keys.size() < count) {
    if (++attempts > cap) {
      throw ValidationError(
          "could not draw enough distinct edges; lower alpha or raise n");
    }
    auto [head, tail] = sample();
    EdgeKey key = key_of(head, tail);
    if (keys.insert(std::move(key)).second) on_commit(head, tail);
  }
  return assemble(cfg, keys);
}

template <typename Sampler>
DirectedHypergraph fill_edges(const GenConfig& cfg, Sampler&& sample) {
  return fill_edges(cfg, std::forward<Sampler>(sample),
                    [](NodeId, const std::vector<NodeId>&) {});
}

}  // namespace

std::string topology_name(Topology t) {
  switch (t) {
    case Topology::kUniform: return "uniform";
    case Topology::kScaleFree: return "scale_free";
    case Topology::kClustered: return "clustered";
    case Topology::kSmallWorld: return "small_world";
  }
  return "unknown";
}

Topology topology_from_name(const std::string& name) {
  if (name == "uniform") return Topology::kUniform;
  if (name == "scale_free") return Topology::kScaleFree;
  if (name == "clustered") return Topology::kClustered;
  if (name == "small_world") return Topology::kSmallWorld;
  throw ValidationError("unknown topology \"" + name +
                        "\"; expected uniform|scale_free|clustered|small_world");
}

std::uint32_t edge_count_for(const GenConfig& cfg) {
  return static_cast<std::uint32_t>(std::llround(cfg.alpha * cfg.n));
}

DirectedHypergraph gen_uniform(const GenConfig& cfg, std::uint64_t seed) {
  check_config(cfg);
  Rng rng = Rng::stream(seed, 1);
  return fill_edges(cfg, [&] {
    NodeId head = rng.uniform_below(cfg.n);
    std::vector<NodeId> tail(cfg.k - 1);
    for (auto& t : tail) t = rng.uniform_below(cfg.n);
    return std::pair{head, std::move(tail)};
  });
}

DirectedHypergraph gen_scale_free(const GenConfig& cfg, std::uint64_t seed) {
  check_config(cfg);
  Rng rng = Rng::stream(seed, 2);
  // Preferential attachment: every slot picks a node with probability
  // proportional to degree + 1, degree counting committed slot incidences.
  // Fenwick tree over integer weights keeps draws O(log n) and exact.
  std::vector<std::uint64_t> fen(cfg.n + 1, 0);
  auto add = [&](std::uint32_t i, std::uint64_t delta) {
    for (std::uint32_t x = i + 1; x <= cfg.n; x += x & (~x + 1)) fen[x] += delta;
  };
  auto pick = [&](std::uint64_t target) {  // smallest i with prefix(i) > target
    std::uint32_t pos = 0;
    std::uint32_t log = 1;
    while ((2u << log) <= cfg.n) ++log;
    for (std::uint32_t step = 1u << log; step > 0; step >>= 1) {
      if (pos + step <= cfg.n && fen[pos + step] <= target) {
        pos += step;
        target -= fen[pos];
      }
    }
    return pos;
  };
  std::uint64_t total = cfg.n;
  for (std::uint32_t i = 0; i < cfg.n; ++i) add(i, 1);

  return fill_edges(
      cfg,
      [&] {
        std::vector<NodeId> slots(cfg.k);
        for (auto& s : slots) {
          std::uint64_t t = static_cast<std::uint64_t>(
              rng.uniform01() * static_cast<double>(total));
          if (t >= total) t = total - 1;
          s = pick(t);
        }
        NodeId head = slots[0];
        std::vector<NodeId> tail(slots.begin() + 1, slots.end());
        return std::pair{head, std::move(tail)};
      },
      [&](NodeId head, const std::vector<NodeId>& tail) {
        add(head, 1);
        for (NodeId s : tail) add(s, 1);
        total += cfg.k;
      });
}

DirectedHypergraph gen_clustered(const GenConfig& cfg, std::uint64_t seed) {
  check_config(cfg);
  if (cfg.modules < 2) throw ValidationError("clustered topology needs at least 2 modules");
  if (cfg.n / cfg.modules < cfg.k - 1) {
    throw ValidationError("module size " + std::to_string(cfg.n / cfg.modules) +
                          " is below k - 1 = " + std::to_string(cfg.k - 1));
  }
  if (cfg.p_intra < 0.0 || cfg.p_intra > 1.0) {
    throw ValidationError("p_intra must be in [0, 1]");
  }
  Rng rng = Rng::stream(seed, 3);
  // Even partition into contiguous blocks; the first (n mod modules) blocks
  // hold one extra node.
  std::vector<std::uint32_t> start(cfg.modules + 1, 0);
  std::uint32_t base = cfg.n / cfg.modules, extra = cfg.n % cfg.modules;
  for (std::uint32_t mIdx = 0; mIdx < cfg.modules; ++mIdx) {
    start[mIdx + 1] = start[mIdx] + base + (mIdx < extra ? 1 : 0);
  }

  return fill_edges(cfg, [&] {
    bool intra = rng.uniform01() < cfg.p_intra;
    NodeId head;
    std::vector<NodeId> tail(cfg.k - 1);
    if (intra) {
      std::uint32_t mIdx = rng.uniform_below(cfg.modules);
      std::uint32_t lo = start[mIdx], width = start[mIdx + 1] - lo;
      head = lo + rng.uniform_below(width);
      for (auto& t : tail) t = lo + rng.uniform_below(width);
    } else {
      head = rng.uniform_below(cfg.n);
      for (auto& t : tail) t = rng.uniform_below(cfg.n);
    }
    return std::pair{head, std::move(tail)};
  });
}

DirectedHypergraph gen_small_world(const GenConfig& cfg, std::uint64_t seed) {
  check_config(cfg);
  if (cfg.rewire < 0.0 || cfg.rewire > 1.0) {
    throw ValidationError("rewire probability must be in [0, 1]");
  }
  Rng rng = Rng::stream(seed, 4);
  std::uint32_t width = cfg.window != 0 ? cfg.window : 2 * cfg.k;
  width = std::min(width, cfg.n);

  return fill_edges(cfg, [&] {
    // Contiguous ring window of `width` nodes centered at a random node.
    std::uint32_t center = rng.uniform_below(cfg.n);
    std::uint32_t lo = (center + cfg.n - width / 2) % cfg.n;
    auto in_window = [&] { return (lo + rng.uniform_below(width)) % cfg.n; };
    NodeId head = in_window();
    std::vector<NodeId> tail(cfg.k - 1);
    for (auto& t : tail) {
      bool global = rng.uniform01() < cfg.rewire;
      t = global ? rng.uniform_below(cfg.n) : in_window();
    }
    return std::pair{head, std::move(tail)};
  });
}

DirectedHypergraph generate(const GenConfig& cfg, std::uint64_t seed) {
  switch (cfg.topology) {
    case Topology::kUniform: return gen_uniform(cfg, seed);
    case Topology::kScaleFree: return gen_scale_free(cfg, seed);
    case Topology::kClustered: return gen_clustered(cfg, seed);
    case Topology::kSmallWorld: return gen_small_world(cfg, seed);
  }
  throw ValidationError("unknown topology");
}

Json gen_metadata(const GenConfig& cfg, std::uint64_t seed) {
  Json m;
  m["generator"] = topology_name(cfg.topology);
  m["n"] = cfg.n;
  m["k"] = cfg.k;
  m["alpha"] = cfg.alpha;
  m["edges"] = edge_count_for(cfg);
  m["seed"] = seed;
  switch (cfg.topology) {
    case Topology::kUniform:
    case Topology::kScaleFree:
      break;
    case Topology::kClustered:
      m["modules"] = cfg.modules;
      m["p_intra"] = cfg.p_intra;
      break;
    case Topology::kSmallWorld:
      m["rewire"] = cfg.rewire;
      m["window"] = std::min(cfg.window != 0 ? cfg.window : 2 * cfg.k, cfg.n);
      break;
  }
  return m;
}

std::string metadata_hash(const Json& metadata) {
  std::string text = metadata.dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace hsc
