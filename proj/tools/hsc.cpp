#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hsc/experiment.hpp"
#include "hsc/gen.hpp"
#include "hsc/json_io.hpp"
#include "hsc/matching.hpp"
#include "hsc/oracle.hpp"
#include "hsc/reach.hpp"
#include "hsc/select.hpp"

namespace {

using hsc::Json;
using hsc::NodeId;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

// "1,3" -> {0, 2}; ids are 1-based on the command line.
std::vector<NodeId> parse_nodes(const std::string& text, const char* what) {
  std::vector<NodeId> out;
  if (text.empty()) return out;
  for (const std::string& part : split_list(text)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || v < 1) {
      throw hsc::ValidationError(std::string(what) + " expects a comma list "
                                 "of 1-based node ids; got '" + part + "'");
    }
    out.push_back(static_cast<NodeId>(v - 1));
  }
  return out;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& text, const char* what, Parse parse) {
  std::vector<T> out;
  for (const std::string& part : split_list(text)) {
    if (part.empty()) {
      throw hsc::ValidationError(std::string(what) + ": empty list entry");
    }
    out.push_back(parse(part));
  }
  return out;
}

std::uint32_t parse_u32(const std::string& part, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(part, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != part.size() || v < 0) {
    throw hsc::ValidationError(std::string(what) + ": bad value '" + part + "'");
  }
  return static_cast<std::uint32_t>(v);
}

double parse_f64(const std::string& part, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(part, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != part.size()) {
    throw hsc::ValidationError(std::string(what) + ": bad value '" + part + "'");
  }
  return v;
}

Json nodes_json(const std::vector<NodeId>& nodes) {
  Json arr = Json::array();
  for (NodeId v : nodes) arr.push_back(v + 1);
  return arr;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw hsc::ValidationError("cannot open output file: " + path);
  f << text;
  if (!f) throw hsc::ValidationError("write failed: " + path);
}

void require_json_format(const std::string& format, const char* cmd) {
  if (format == "csv") {
    throw hsc::ValidationError(std::string(cmd) +
                               " emits JSON; --format csv is not available");
  }
}

// Matching certificate rows. Pair indices follow driver_matching's synthetic
// head list: hypergraph edges first, then one singleton per driver.
Json matching_pairs_json(const hsc::DirectedHypergraph& h,
                         const std::vector<NodeId>& drivers,
                         const hsc::Matching& m) {
  Json arr = Json::array();
  for (const auto& [e, v] : m.pairs) {
    Json row;
    row["node"] = v + 1;
    if (e < h.edges().size()) {
      const auto& edge = h.edges()[e];
      if (edge.is_control) {
        row["control"] = edge.tail.front() - h.num_nodes() + 1;
      } else {
        row["edge"] = e + 1;
      }
    } else {
      row["driver"] = drivers[e - h.edges().size()] + 1;
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

Json witness_json(const hsc::DilationWitness& w) {
  Json j;
  j["nodes"] = nodes_json(w.nodes);
  j["distinct_heads"] = w.distinct_heads;
  j["deficiency"] = static_cast<std::uint32_t>(w.nodes.size()) - w.distinct_heads;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct GridArgs {
  std::string ks = "4";
  std::string alphas = "1.0";
  std::string ns = "10";
  std::string topologies = "uniform";
  std::string methods = "matching,greedy,mag";
  std::uint32_t trials = 3;
};

hsc::ExperimentSpec spec_from_args(const GridArgs& a, std::uint64_t seed) {
  hsc::ExperimentSpec spec;
  spec.ks = parse_list<std::uint32_t>(a.ks, "--k", [](const std::string& s) {
    return parse_u32(s, "--k");
  });
  spec.alphas = parse_list<double>(a.alphas, "--alpha", [](const std::string& s) {
    return parse_f64(s, "--alpha");
  });
  spec.ns = parse_list<std::uint32_t>(a.ns, "--n", [](const std::string& s) {
    return parse_u32(s, "--n");
  });
  spec.topologies = parse_list<hsc::Topology>(
      a.topologies, "--topology",
      [](const std::string& s) { return hsc::topology_from_name(s); });
  spec.methods = parse_list<hsc::Method>(
      a.methods, "--methods",
      [](const std::string& s) { return hsc::method_from_name(s); });
  spec.trials = a.trials;
  spec.seed = seed;
  return spec;
}

Json trial_rows_json(const std::vector<hsc::TrialRow>& rows,
                     const std::string& experiment, bool extended) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["experiment"] = experiment;
    j["k"] = r.k;
    j["alpha"] = r.alpha;
    j["n"] = r.n;
    j["topology"] = hsc::topology_name(r.topology);
    j["method"] = hsc::method_name(r.method);
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["num_drivers"] = r.num_drivers;
    j["lower_bound"] = r.lower_bound;
    j["controllable"] = r.controllable;
    j["runtime_ms"] = r.runtime_ms;
    if (extended) {
      j["structure_bytes"] = r.structure_bytes;
      j["meta_hash"] = r.meta_hash;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

Json structured_rows_json(const std::vector<hsc::StructuredRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["experiment"] = "structured";
    j["topology"] = hsc::topology_name(r.topology);
    j["k"] = r.k;
    j["alpha"] = r.alpha;
    j["n"] = r.n;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["num_drivers"] = r.num_drivers;
    j["driver_mean_in_degree"] = r.driver_mean_in_degree;
    j["nondriver_mean_in_degree"] = r.nondriver_mean_in_degree;
    j["network_mean_in_degree"] = r.network_mean_in_degree;
    j["driver_mean_betweenness"] = r.driver_mean_betweenness;
    j["network_mean_betweenness"] = r.network_mean_betweenness;
    j["meta_hash"] = r.meta_hash;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural controllability toolkit for directed hypergraphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out;
  std::string format;
  app.add_option("--seed", seed, "master random seed")->capture_default_str();
  app.add_option("--out", out, "output file (default: stdout)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded random hypergraph");
  gen->fallthrough();
  std::string topology = "uniform";
  hsc::GenConfig cfg;
  gen->add_option("--topology", topology, "uniform|scale_free|clustered|small_world")
      ->check(CLI::IsMember({"uniform", "scale_free", "clustered", "small_world"}))
      ->capture_default_str();
  gen->add_option("--n", cfg.n, "state node count")->required();
  gen->add_option("--k", cfg.k, "hyperedge order (1 head + k-1 tail)")
      ->capture_default_str();
  gen->add_option("--alpha", cfg.alpha, "edge density m/n")->capture_default_str();
  gen->add_option("--modules", cfg.modules, "clustered: module count")
      ->capture_default_str();
  gen->add_option("--p-intra", cfg.p_intra, "clustered: intra-module probability")
      ->capture_default_str();
  gen->add_option("--rewire", cfg.rewire, "small_world: per-slot rewire probability")
      ->capture_default_str();
  gen->add_option("--window", cfg.window, "small_world: ring window (0 = 2k)")
      ->capture_default_str();
  gen->callback([&] {
    require_json_format(format, "gen");
    cfg.topology = hsc::topology_from_name(topology);
    hsc::DirectedHypergraph h = hsc::generate(cfg, seed);
    Json meta = hsc::gen_metadata(cfg, seed);
    write_output(out, hsc::write_hypergraph(h, &meta));
  });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check structural controllability of a driver set");
  verify->fallthrough();
  std::string verify_input, verify_drivers, verify_targets;
  std::string dilation_mode = "matching";
  verify->add_option("--input", verify_input, "hypergraph JSON file")->required();
  verify->add_option("--drivers", verify_drivers, "comma list of 1-based driver ids");
  verify->add_option("--dilation", dilation_mode, "dilation test to report")
      ->check(CLI::IsMember({"matching", "exact", "both"}))
      ->capture_default_str();
  verify->add_option("--targets", verify_targets,
                     "comma list of target ids for an accessibility query");
  verify->callback([&] {
    require_json_format(format, "verify");
    hsc::DirectedHypergraph h = hsc::load_hypergraph_file(verify_input);
    std::vector<NodeId> drivers = parse_nodes(verify_drivers, "--drivers");
    std::sort(drivers.begin(), drivers.end());
    drivers.erase(std::unique(drivers.begin(), drivers.end()), drivers.end());

    hsc::VerifyResult vr = hsc::verify_structural_controllability(h, drivers);
    hsc::ReachResult rr = hsc::walk_reach(h, drivers);

    Json j;
    j["n"] = h.num_nodes();
    j["k"] = h.order();
    j["drivers"] = nodes_json(drivers);
    j["semantics"] = vr.odd_order ? "strong_accessibility"
                                  : "structural_controllability";
    j["odd_order"] = vr.odd_order;
    j["controllable"] = vr.controllable;
    j["accessibility_ok"] = vr.accessibility_ok;
    j["dilation_free"] = vr.dilation_free;
    j["accessible"] = nodes_json(rr.accessible);
    j["inaccessible"] = nodes_json(vr.inaccessible);

    Json dil;
    dil["mode"] = dilation_mode;
    if (dilation_mode == "matching" || dilation_mode == "both") {
      hsc::Matching m = hsc::driver_matching(h, drivers);
      Json mj;
      mj["has_dilation"] = !m.uncovered.empty();
      mj["uncovered"] = nodes_json(m.uncovered);
      mj["matching"] = matching_pairs_json(h, drivers, m);
      if (dilation_mode == "both") {
        dil["matching"] = std::move(mj);
      } else {
        dil.update(mj);
      }
    }
    if (dilation_mode == "exact" || dilation_mode == "both") {
      auto w = hsc::find_dilation_exact(h, drivers);
      Json ej;
      ej["has_dilation"] = w.has_value();
      ej["witness"] = w ? witness_json(*w) : Json(nullptr);
      if (dilation_mode == "both") {
        dil["exact"] = std::move(ej);
        dil["agree"] = dil["matching"]["has_dilation"] == dil["exact"]["has_dilation"];
      } else {
        dil.update(ej);
      }
    }
    j["dilation"] = std::move(dil);

    if (!verify_targets.empty()) {
      std::vector<NodeId> targets = parse_nodes(verify_targets, "--targets");
      j["targets"] = nodes_json(targets);
      j["targets_accessible"] = hsc::target_accessible(h, drivers, targets);
    }
    write_output(out, dump(j));
  });

  // select
  auto* select = app.add_subcommand("select", "choose a driver node set");
  select->fallthrough();
  std::string select_input, select_method;
  bool select_strip = false;
  select->add_option("--input", select_input, "hypergraph JSON file")->required();
  select->add_option("--method", select_method, "matching|greedy|mag|optimal")
      ->check(CLI::IsMember({"matching", "greedy", "mag", "optimal"}))
      ->required();
  select->add_flag("--strip-controls", select_strip,
                   "drop existing control edges before selecting");
  select->callback([&] {
    require_json_format(format, "select");
    hsc::DirectedHypergraph h = hsc::load_hypergraph_file(select_input);
    if (select_strip) h = hsc::strip_controls(h);
    hsc::SelectionResult s =
        hsc::run_selection(h, hsc::method_from_name(select_method));
    Json j;
    j["method"] = hsc::method_name(s.method);
    j["n"] = h.num_nodes();
    j["k"] = h.order();
    j["drivers"] = nodes_json(s.drivers);
    j["num_drivers"] = static_cast<std::uint32_t>(s.drivers.size());
    j["lower_bound"] = s.lower_bound;
    j["controllable"] = s.controllable;
    j["runtime_ms"] = s.runtime_ms;
    Json steps = Json::array();
    for (const auto& st : s.steps) {
      steps.push_back(Json{{"node", st.node + 1}, {"gain", st.gain}});
    }
    j["steps"] = std::move(steps);
    write_output(out, dump(j));
  });

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "numeric rank cross-check on random realizations");
  oracle->fallthrough();
  std::string oracle_input, oracle_drivers;
  std::uint32_t oracle_trials = 10;
  oracle->add_option("--input", oracle_input, "hypergraph JSON file")->required();
  oracle->add_option("--drivers", oracle_drivers, "comma list of 1-based driver ids");
  oracle->add_option("--trials", oracle_trials, "number of random realizations")
      ->capture_default_str();
  oracle->callback([&] {
    require_json_format(format, "oracle");
    hsc::DirectedHypergraph h = hsc::load_hypergraph_file(oracle_input);
    std::vector<NodeId> drivers = parse_nodes(oracle_drivers, "--drivers");
    std::sort(drivers.begin(), drivers.end());
    drivers.erase(std::unique(drivers.begin(), drivers.end()), drivers.end());
    hsc::SparsityPattern p = hsc::pattern_from_hypergraph(h);
    hsc::CrossValidation cv = hsc::cross_validate(p, drivers, oracle_trials, seed);
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["drivers"] = nodes_json(drivers);
    j["trials"] = oracle_trials;
    j["seed"] = seed;
    j["fraction_full_rank"] = cv.fraction_full_rank;
    j["per_trial_ranks"] = cv.per_trial_ranks;
    j["structural_verdict"] = cv.structural_verdict;
    write_output(out, dump(j));
  });

  // experiment small|large|structured
  auto* experiment = app.add_subcommand("experiment", "seeded experiment sweeps");
  experiment->fallthrough();
  experiment->require_subcommand(1);
  GridArgs grid;
  experiment->add_option("--k", grid.ks, "comma list of orders")
      ->capture_default_str();
  experiment->add_option("--alpha", grid.alphas, "comma list of densities")
      ->capture_default_str();
  experiment->add_option("--n", grid.ns, "comma list of sizes")
      ->capture_default_str();
  experiment->add_option("--topology", grid.topologies, "comma list of topologies")
      ->capture_default_str();
  experiment->add_option("--methods", grid.methods, "comma list of methods")
      ->capture_default_str();
  experiment->add_option("--trials", grid.trials, "trials per grid point")
      ->capture_default_str();

  auto* small = experiment->add_subcommand(
      "small", "driver counts per method on a small grid");
  small->fallthrough();
  small->callback([&] {
    hsc::ExperimentSpec spec = spec_from_args(grid, seed);
    if (format == "json") {
      write_output(out, dump(trial_rows_json(hsc::run_trials(spec, "small_scale"),
                                             "small_scale", false)));
      return;
    }
    std::ostringstream os;
    hsc::run_small_scale(spec, os);
    write_output(out, os.str());
  });

  auto* large = experiment->add_subcommand(
      "large", "runtime and structure-size scaling sweep");
  large->fallthrough();
  large->callback([&] {
    hsc::ExperimentSpec spec = spec_from_args(grid, seed);
    if (format == "json") {
      for (hsc::Method m : spec.methods) {
        if (m == hsc::Method::kOptimal) {
          throw hsc::CapacityError("the optimal method is limited to small instances");
        }
      }
      write_output(out, dump(trial_rows_json(hsc::run_trials(spec, "large_scale"),
                                             "large_scale", true)));
      return;
    }
    std::ostringstream os;
    hsc::run_large_scale(spec, os);
    write_output(out, os.str());
  });

  auto* structured = experiment->add_subcommand(
      "structured", "driver centrality statistics per topology");
  structured->fallthrough();
  std::string nodes_out;
  structured->add_option("--nodes-out", nodes_out, "per-node statistics CSV file");
  structured->callback([&] {
    hsc::ExperimentSpec spec = spec_from_args(grid, seed);
    if (format == "json") {
      write_output(out, dump(structured_rows_json(hsc::run_structured_rows(spec))));
    } else {
      std::ostringstream os;
      hsc::run_structured(spec, os);
      write_output(out, os.str());
    }
    if (!nodes_out.empty()) {
      std::ostringstream os;
      hsc::write_structured_nodes_csv(spec, os);
      std::ofstream f(nodes_out, std::ios::binary);
      if (!f) throw hsc::ValidationError("cannot open output file: " + nodes_out);
      f << os.str();
    }
  });

  // bench
  auto* bench = app.add_subcommand("bench", "selection timing sweep");
  bench->fallthrough();
  GridArgs bench_grid;
  bench_grid.ns = "1250,2500,5000";
  bench_grid.methods = "mag";
  bench->add_option("--k", bench_grid.ks, "comma list of orders")
      ->capture_default_str();
  bench->add_option("--alpha", bench_grid.alphas, "comma list of densities")
      ->capture_default_str();
  bench->add_option("--n", bench_grid.ns, "comma list of sizes")
      ->capture_default_str();
  bench->add_option("--topology", bench_grid.topologies, "comma list of topologies")
      ->capture_default_str();
  bench->add_option("--methods", bench_grid.methods, "comma list of methods")
      ->capture_default_str();
  bench->add_option("--trials", bench_grid.trials, "trials per grid point")
      ->capture_default_str();
  bench->callback([&] {
    hsc::ExperimentSpec spec = spec_from_args(bench_grid, seed);
    if (format == "json") {
      write_output(out, dump(trial_rows_json(hsc::run_trials(spec, "bench"),
                                             "bench", true)));
      return;
    }
    std::ostringstream os;
    hsc::run_bench(spec, os);
    write_output(out, os.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const hsc::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hsc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
