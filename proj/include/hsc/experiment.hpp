#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hsc/gen.hpp"
#include "hsc/select.hpp"

namespace hsc {

struct NodeStats {
  NodeId node = 0;
  std::uint32_t in_degree = 0;  // distinct predecessors in the projection
  double betweenness = 0.0;     // exact, directed, endpoints excluded
  bool is_driver = false;
};

// Per-node statistics on the tail-to-head projection digraph.
std::vector<NodeStats> compute_node_stats(const DirectedHypergraph& h,
                                          const std::vector<NodeId>& drivers);

// Exact betweenness centrality of a digraph (Brandes' accumulation over
// breadth-first shortest paths).
std::vector<double> betweenness_centrality(const Digraph& g);

struct ExperimentSpec {
  std::vector<std::uint32_t> ks{4};
  std::vector<double> alphas{1.0};
  std::vector<std::uint32_t> ns{10};
  std::vector<Topology> topologies{Topology::kUniform};
  std::vector<Method> methods{Method::kMatching, Method::kGreedy, Method::kMag};
  std::uint32_t trials = 3;
  std::uint64_t seed = 1;
};

// One selection run on one generated instance.
struct TrialRow {
  std::uint32_t k = 0;
  double alpha = 0.0;
  std::uint32_t n = 0;
  Topology topology = Topology::kUniform;
  Method method = Method::kMatching;
  std::uint32_t trial = 0;   // 1-based
  std::uint64_t seed = 0;    // instance seed, reproducible via gen
  std::uint32_t num_drivers = 0;
  std::uint32_t lower_bound = 0;
  bool controllable = false;
  double runtime_ms = 0.0;
  std::uint64_t structure_bytes = 0;  // edge payload of the instance
  std::string meta_hash;
};

// Deterministic instance seed for one grid point.
std::uint64_t trial_seed(std::uint64_t master, const std::string& tag,
                         std::uint32_t trial);

std::vector<TrialRow> run_trials(const ExperimentSpec& spec,
                                 const std::string& experiment);

// Driver-count sweeps over a (k, alpha, n) grid against every method,
// with mean/std aggregate rows per grid point. Fixed column set:
// experiment,k,alpha,n,topology,method,trial,seed,num_drivers,lower_bound,
// controllable,runtime_ms
void write_small_scale_csv(const std::vector<TrialRow>& rows, std::ostream& os);
void run_small_scale(const ExperimentSpec& spec, std::ostream& os);

// Runtime and memory scaling sweep; adds structure_bytes and meta_hash
// columns. The optimal method is rejected here.
void run_large_scale(const ExperimentSpec& spec, std::ostream& os);

// Selection timing rows only (same layout as large scale).
void run_bench(const ExperimentSpec& spec, std::ostream& os);

struct StructuredRow {
  Topology topology = Topology::kUniform;
  std::uint32_t k = 0;
  double alpha = 0.0;
  std::uint32_t n = 0;
  std::uint32_t trial = 0;
  std::uint64_t seed = 0;
  std::uint32_t num_drivers = 0;
  double driver_mean_in_degree = 0.0;
  double nondriver_mean_in_degree = 0.0;
  double network_mean_in_degree = 0.0;
  double driver_mean_betweenness = 0.0;
  double network_mean_betweenness = 0.0;
  std::string meta_hash;
};

std::vector<StructuredRow> run_structured_rows(const ExperimentSpec& spec);

// Per-node stats table for every structured trial.
void write_structured_nodes_csv(const ExperimentSpec& spec, std::ostream& os);

// MaG driver placement against topology: per-trial centrality summaries and
// mean/std aggregates; optionally a per-node stats table.
void run_structured(const ExperimentSpec& spec, std::ostream& summary,
                    std::ostream* nodes = nullptr);

}  // namespace hsc
