#include "hsc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "hsc/rng.hpp"

namespace hsc {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

std::string fmt_alpha(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double std_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t edge_payload_bytes(const DirectedHypergraph& h) {
  std::uint64_t entries = 0;
  for (const auto& e : h.edges()) entries += e.head.size() + e.tail.size();
  return entries * sizeof(NodeId);
}

void check_methods(const ExperimentSpec& spec, bool allow_optimal) {
  for (Method m : spec.methods) {
    if (m == Method::kOptimal) {
      if (!allow_optimal) {
        throw CapacityError("the optimal method is limited to small instances");
      }
      for (std::uint32_t n : spec.ns) {
        if (n > 12) {
          throw CapacityError(
              "the optimal method is capped at n = 12; got n = " +
              std::to_string(n));
        }
      }
    }
  }
}

struct Aggregate {
  std::vector<double> drivers, lower, controllable, runtime;
};

}  // namespace

std::vector<double> betweenness_centrality(const Digraph& g) {
  std::vector<double> bc(g.n, 0.0);
  std::vector<std::int64_t> dist(g.n);
  std::vector<double> sigma(g.n), delta(g.n);
  std::vector<NodeId> order;
  std::vector<std::vector<NodeId>> preds(g.n);
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();
    queue.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push_back(s);
    std::size_t qi = 0;
    while (qi < queue.size()) {
      NodeId u = queue[qi++];
      order.push_back(u);
      for (NodeId w : g.out[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[u] + 1) {
          sigma[w] += sigma[u];
          preds[w].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (NodeId u : preds[w]) {
        delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) bc[w] += delta[w];
    }
  }
  return bc;
}

std::vector<NodeStats> compute_node_stats(const DirectedHypergraph& h,
                                          const std::vector<NodeId>& drivers) {
  Digraph g = projection_digraph(h);
  std::vector<NodeStats> stats(g.n);
  for (NodeId v = 0; v < g.n; ++v) {
    stats[v].node = v;
  }
  for (NodeId u = 0; u < g.n; ++u) {
    for (NodeId w : g.out[u]) ++stats[w].in_degree;
  }
  std::vector<double> bc = betweenness_centrality(g);
  for (NodeId v = 0; v < g.n; ++v) stats[v].betweenness = bc[v];
  for (NodeId d : drivers) {
    if (d >= g.n) {
      throw ValidationError("driver node id " + std::to_string(d + 1) +
                            " out of range (n = " + std::to_string(g.n) + ")");
    }
    stats[d].is_driver = true;
  }
  return stats;
}

std::uint64_t trial_seed(std::uint64_t master, const std::string& tag,
                         std::uint32_t trial) {
  std::uint64_t s = master;
  splitmix64(s);
  s ^= fnv1a(tag + "#" + std::to_string(trial));
  return splitmix64(s);
}

std::vector<TrialRow> run_trials(const ExperimentSpec& spec,
                                 const std::string& experiment) {
  std::vector<TrialRow> rows;
  for (std::uint32_t k : spec.ks) {
    for (double alpha : spec.alphas) {
      for (std::uint32_t n : spec.ns) {
        for (Topology topo : spec.topologies) {
          GenConfig cfg;
          cfg.n = n;
          cfg.k = k;
          cfg.alpha = alpha;
          cfg.topology = topo;
          std::string tag = experiment + "/" + topology_name(topo) + "/k" +
                            std::to_string(k) + "/a" + fmt_alpha(alpha) + "/n" +
                            std::to_string(n);
          for (std::uint32_t t = 1; t <= spec.trials; ++t) {
            std::uint64_t seed = trial_seed(spec.seed, tag, t);
            DirectedHypergraph h = generate(cfg, seed);
            std::string hash = metadata_hash(gen_metadata(cfg, seed));
            std::uint64_t bytes = edge_payload_bytes(h);
            for (Method m : spec.methods) {
              SelectionResult sel = run_selection(h, m);
              TrialRow row;
              row.k = k;
              row.alpha = alpha;
              row.n = n;
              row.topology = topo;
              row.method = m;
              row.trial = t;
              row.seed = seed;
              row.num_drivers = static_cast<std::uint32_t>(sel.drivers.size());
              row.lower_bound = sel.lower_bound;
              row.controllable = sel.controllable;
              row.runtime_ms = sel.runtime_ms;
              row.structure_bytes = bytes;
              row.meta_hash = hash;
              rows.push_back(std::move(row));
            }
          }
        }
      }
    }
  }
  return rows;
}

namespace {

// Shared row writer. Per-trial rows keep integral values; aggregate rows
// (trial = mean|std) carry three-decimal summaries and an empty seed.
void write_rows(const std::vector<TrialRow>& rows, std::ostream& os,
                const std::string& experiment, bool extended) {
  os << "experiment,k,alpha,n,topology,method,trial,seed,num_drivers,"
        "lower_bound,controllable,runtime_ms";
  if (extended) os << ",structure_bytes,meta_hash";
  os << "\n";

  auto emit_block = [&](const std::vector<const TrialRow*>& block) {
    Aggregate agg;
    for (const TrialRow* r : block) {
      os << experiment << "," << r->k << "," << fmt_alpha(r->alpha) << ","
         << r->n << "," << topology_name(r->topology) << ","
         << method_name(r->method) << "," << r->trial << "," << r->seed << ","
         << r->num_drivers << "," << r->lower_bound << ","
         << (r->controllable ? 1 : 0) << "," << fmt(r->runtime_ms);
      if (extended) os << "," << r->structure_bytes << "," << r->meta_hash;
      os << "\n";
      agg.drivers.push_back(r->num_drivers);
      agg.lower.push_back(r->lower_bound);
      agg.controllable.push_back(r->controllable ? 1.0 : 0.0);
      agg.runtime.push_back(r->runtime_ms);
    }
    const TrialRow& first = *block.front();
    for (bool is_mean : {true, false}) {
      auto pickv = [&](const std::vector<double>& xs) {
        return is_mean ? mean_of(xs) : std_of(xs);
      };
      os << experiment << "," << first.k << "," << fmt_alpha(first.alpha)
         << "," << first.n << "," << topology_name(first.topology) << ","
         << method_name(first.method) << "," << (is_mean ? "mean" : "std")
         << ",," << fmt(pickv(agg.drivers)) << "," << fmt(pickv(agg.lower))
         << "," << fmt(pickv(agg.controllable)) << ","
         << fmt(pickv(agg.runtime));
      if (extended) os << ",,";
      os << "\n";
    }
  };

  // Rows arrive grouped by grid point with methods interleaved per trial;
  // aggregate per (grid point, method) in first-appearance order.
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].k == rows[i].k &&
           rows[j].alpha == rows[i].alpha && rows[j].n == rows[i].n &&
           rows[j].topology == rows[i].topology) {
      ++j;
    }
    std::vector<Method> seen;
    for (std::size_t x = i; x < j; ++x) {
      if (std::find(seen.begin(), seen.end(), rows[x].method) == seen.end()) {
        seen.push_back(rows[x].method);
      }
    }
    for (Method m : seen) {
      std::vector<const TrialRow*> block;
      for (std::size_t x = i; x < j; ++x) {
        if (rows[x].method == m) block.push_back(&rows[x]);
      }
      if (!block.empty()) emit_block(block);
    }
    i = j;
  }
}

}  // namespace

void write_small_scale_csv(const std::vector<TrialRow>& rows, std::ostream& os) {
  write_rows(rows, os, "small_scale", false);
}

void run_small_scale(const ExperimentSpec& spec, std::ostream& os) {
  check_methods(spec, true);
  write_small_scale_csv(run_trials(spec, "small_scale"), os);
}

void run_large_scale(const ExperimentSpec& spec, std::ostream& os) {
  check_methods(spec, false);
  write_rows(run_trials(spec, "large_scale"), os, "large_scale", true);
}

void run_bench(const ExperimentSpec& spec, std::ostream& os) {
  check_methods(spec, true);
  write_rows(run_trials(spec, "bench"), os, "bench", true);
}

std::vector<StructuredRow> run_structured_rows(const ExperimentSpec& spec) {
  std::vector<StructuredRow> rows;
  for (std::uint32_t k : spec.ks) {
    for (Topology topo : spec.topologies) {
      for (double alpha : spec.alphas) {
        for (std::uint32_t n : spec.ns) {
          GenConfig cfg;
          cfg.n = n;
          cfg.k = k;
          cfg.alpha = alpha;
          cfg.topology = topo;
          std::string tag = std::string("structured/") + topology_name(topo) +
                            "/k" + std::to_string(k) + "/a" + fmt_alpha(alpha) +
                            "/n" + std::to_string(n);
          for (std::uint32_t t = 1; t <= spec.trials; ++t) {
            std::uint64_t seed = trial_seed(spec.seed, tag, t);
            DirectedHypergraph h = generate(cfg, seed);
            SelectionResult sel = select_mag(h);
            std::vector<NodeStats> stats = compute_node_stats(h, sel.drivers);
            StructuredRow row;
            row.topology = topo;
            row.k = k;
            row.alpha = alpha;
            row.n = n;
            row.trial = t;
            row.seed = seed;
            row.num_drivers = static_cast<std::uint32_t>(sel.drivers.size());
            double d_in = 0, nd_in = 0, all_in = 0, d_bc = 0, all_bc = 0;
            std::uint32_t nd = row.num_drivers;
            for (const NodeStats& s : stats) {
              all_in += s.in_degree;
              all_bc += s.betweenness;
              if (s.is_driver) {
                d_in += s.in_degree;
                d_bc += s.betweenness;
              } else {
                nd_in += s.in_degree;
              }
            }
            row.driver_mean_in_degree = nd == 0 ? 0.0 : d_in / nd;
            row.nondriver_mean_in_degree =
                (n - nd) == 0 ? 0.0 : nd_in / (n - nd);
            row.network_mean_in_degree = n == 0 ? 0.0 : all_in / n;
            row.driver_mean_betweenness = nd == 0 ? 0.0 : d_bc / nd;
            row.network_mean_betweenness = n == 0 ? 0.0 : all_bc / n;
            row.meta_hash = metadata_hash(gen_metadata(cfg, seed));
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

void run_structured(const ExperimentSpec& spec, std::ostream& summary,
                    std::ostream* nodes) {
  std::vector<StructuredRow> rows = run_structured_rows(spec);
  summary << "experiment,topology,k,alpha,n,trial,seed,num_drivers,"
             "driver_mean_in_degree,nondriver_mean_in_degree,"
             "network_mean_in_degree,driver_mean_betweenness,"
             "network_mean_betweenness,meta_hash\n";
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].topology == rows[i].topology &&
           rows[j].alpha == rows[i].alpha && rows[j].n == rows[i].n &&
           rows[j].k == rows[i].k) {
      ++j;
    }
    std::vector<double> drv, din, ndin, nin, dbc, nbc;
    for (std::size_t x = i; x < j; ++x) {
      const StructuredRow& r = rows[x];
      summary << "structured," << topology_name(r.topology) << "," << r.k
              << "," << fmt_alpha(r.alpha) << "," << r.n << "," << r.trial
              << "," << r.seed << "," << r.num_drivers << ","
              << fmt(r.driver_mean_in_degree) << ","
              << fmt(r.nondriver_mean_in_degree) << ","
              << fmt(r.network_mean_in_degree) << ","
              << fmt(r.driver_mean_betweenness) << ","
              << fmt(r.network_mean_betweenness) << "," << r.meta_hash << "\n";
      drv.push_back(r.num_drivers);
      din.push_back(r.driver_mean_in_degree);
      ndin.push_back(r.nondriver_mean_in_degree);
      nin.push_back(r.network_mean_in_degree);
      dbc.push_back(r.driver_mean_betweenness);
      nbc.push_back(r.network_mean_betweenness);
    }
    const StructuredRow& first = rows[i];
    for (const char* stat : {"mean", "std"}) {
      bool is_mean = std::string(stat) == std::string("mean");
      auto pickv = [&](const std::vector<double>& xs) {
        return is_mean ? mean_of(xs) : std_of(xs);
      };
      summary << "structured," << topology_name(first.topology) << ","
              << first.k << "," << fmt_alpha(first.alpha) << "," << first.n
              << "," << stat << ",," << fmt(pickv(drv)) << ","
              << fmt(pickv(din)) << "," << fmt(pickv(ndin)) << ","
              << fmt(pickv(nin)) << "," << fmt(pickv(dbc)) << ","
              << fmt(pickv(nbc)) << ",\n";
    }
    i = j;
  }

  if (nodes != nullptr) write_structured_nodes_csv(spec, *nodes);
}

void write_structured_nodes_csv(const ExperimentSpec& spec, std::ostream& os) {
  os << "experiment,topology,k,alpha,n,trial,seed,node,in_degree,"
        "betweenness,is_driver\n";
  for (std::uint32_t k : spec.ks) {
    for (Topology topo : spec.topologies) {
      for (double alpha : spec.alphas) {
        for (std::uint32_t n : spec.ns) {
          GenConfig cfg;
          cfg.n = n;
          cfg.k = k;
          cfg.alpha = alpha;
          cfg.topology = topo;
          std::string tag = std::string("structured/") + topology_name(topo) +
                            "/k" + std::to_string(k) + "/a" + fmt_alpha(alpha) +
                            "/n" + std::to_string(n);
          for (std::uint32_t t = 1; t <= spec.trials; ++t) {
            std::uint64_t seed = trial_seed(spec.seed, tag, t);
            DirectedHypergraph h = generate(cfg, seed);
            SelectionResult sel = select_mag(h);
            for (const NodeStats& s : compute_node_stats(h, sel.drivers)) {
              os << "structured," << topology_name(topo) << "," << k << ","
                 << fmt_alpha(alpha) << "," << n << "," << t << "," << seed
                 << "," << s.node + 1 << "," << s.in_degree << ","
                 << fmt(s.betweenness) << "," << (s.is_driver ? 1 : 0) << "\n";
            }
          }
        }
      }
    }
  }
}

}  // namespace hsc
