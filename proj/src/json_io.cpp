#include "hsc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hsc {

namespace {

std::uint32_t get_uint(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ValidationError(std::string("missing or invalid \"") + key +
                          "\" field");
  }
  return j[key].get<std::uint32_t>();
}

std::vector<NodeId> node_list(const Json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError(std::string(what) + " must be a non-empty array");
  }
  std::vector<NodeId> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
      throw ValidationError(std::string(what) + " ids must be positive integers");
    }
    out.push_back(v.get<NodeId>() - 1);
  }
  return out;
}

}  // namespace

Json hypergraph_to_json(const DirectedHypergraph& h, const Json* metadata) {
  Json j;
  j["n"] = h.num_nodes();
  j["k"] = h.order();
  j["edges"] = Json::array();
  j["controls"] = Json::array();
  for (std::uint32_t i = 0; i < h.edges().size(); ++i) {
    const auto& e = h.edges()[i];
    if (e.is_control) {
      Json c;
      c["node"] = e.head.front() + 1;
      c["input"] = e.tail.front() - h.num_nodes() + 1;
      j["controls"].push_back(std::move(c));
    } else {
      Json je;
      je["head"] = Json::array();
      je["tail"] = Json::array();
      for (NodeId v : e.head) je["head"].push_back(v + 1);
      for (NodeId v : e.tail) je["tail"].push_back(v + 1);
      j["edges"].push_back(std::move(je));
    }
  }
  if (metadata != nullptr) j["metadata"] = *metadata;
  return j;
}

DirectedHypergraph hypergraph_from_json(const Json& j, Json* metadata_out) {
  if (!j.is_object()) throw ValidationError("hypergraph document must be an object");
  std::uint32_t n = get_uint(j, "n");
  std::uint32_t k = get_uint(j, "k");
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw ValidationError("missing or invalid \"edges\" field");
  }
  if (!j.contains("controls") || !j["controls"].is_array()) {
    throw ValidationError("missing or invalid \"controls\" field");
  }
  std::vector<Hyperedge> edges;
  edges.reserve(j["edges"].size());
  for (const auto& je : j["edges"]) {
    if (!je.is_object()) throw ValidationError("edge entries must be objects");
    Hyperedge e;
    e.head = node_list(je.contains("head") ? je["head"] : Json(), "edge head");
    e.tail = node_list(je.contains("tail") ? je["tail"] : Json(), "edge tail");
    edges.push_back(std::move(e));
  }
  std::vector<std::pair<NodeId, NodeId>> controls;
  controls.reserve(j["controls"].size());
  for (const auto& jc : j["controls"]) {
    if (!jc.is_object()) throw ValidationError("control entries must be objects");
    std::uint32_t node = get_uint(jc, "node");
    std::uint32_t input = get_uint(jc, "input");
    if (node == 0 || input == 0) {
      throw ValidationError("control ids must be positive integers");
    }
    controls.emplace_back(node - 1, input - 1);
  }
  if (metadata_out != nullptr) {
    *metadata_out = j.contains("metadata") ? j["metadata"] : Json();
  }
  return DirectedHypergraph::from_edges(n, k, std::move(edges), controls);
}

std::string write_hypergraph(const DirectedHypergraph& h, const Json* metadata) {
  return hypergraph_to_json(h, metadata).dump(2) + "\n";
}

DirectedHypergraph read_hypergraph(const std::string& text, Json* metadata_out) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("invalid JSON input");
  return hypergraph_from_json(j, metadata_out);
}

void save_hypergraph_file(const DirectedHypergraph& h, const std::string& path,
                          const Json* metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << write_hypergraph(h, metadata);
}

DirectedHypergraph load_hypergraph_file(const std::string& path,
                                        Json* metadata_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_hypergraph(buf.str(), metadata_out);
}

}  // namespace hsc
