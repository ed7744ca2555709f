#pragma once

#include <cstdint>
#include <string>

#include "hsc/hypergraph.hpp"
#include "hsc/json_io.hpp"

namespace hsc {

enum class Topology { kUniform, kScaleFree, kClustered, kSmallWorld };

std::string topology_name(Topology t);
Topology topology_from_name(const std::string& name);

// Random hypergraph configuration. The edge count is round(alpha * n) state
// edges; every generated edge has one head node and k-1 tail entries drawn
// with replacement, and duplicate edges are re-sampled. Generators emit no
// control edges.
struct GenConfig {
  std::uint32_t n = 0;
  std::uint32_t k = 4;
  double alpha = 1.0;
  Topology topology = Topology::kUniform;
  // clustered
  std::uint32_t modules = 5;
  double p_intra = 0.9;
  // small world
  double rewire = 0.1;       // per-tail-slot probability of a global rewire
  std::uint32_t window = 0;  // ring window width; 0 means the 2k default
};

std::uint32_t edge_count_for(const GenConfig& cfg);

// Deterministic per (cfg, seed): equal inputs serialize byte-identically.
DirectedHypergraph generate(const GenConfig& cfg, std::uint64_t seed);

DirectedHypergraph gen_uniform(const GenConfig& cfg, std::uint64_t seed);
DirectedHypergraph gen_scale_free(const GenConfig& cfg, std::uint64_t seed);
DirectedHypergraph gen_clustered(const GenConfig& cfg, std::uint64_t seed);
DirectedHypergraph gen_small_world(const GenConfig& cfg, std::uint64_t seed);

// Provenance block embedded in generated files and hashed into experiment
// rows.
Json gen_metadata(const GenConfig& cfg, std::uint64_t seed);
std::string metadata_hash(const Json& metadata);  // fnv1a-64, 16 hex chars

}  // namespace hsc
