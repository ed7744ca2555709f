#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hsc/hypergraph.hpp"

namespace hsc {

using Json = nlohmann::ordered_json;

// File schema, 1-based ids:
//   {"n": int, "k": int,
//    "edges":    [{"head": [int...], "tail": [int...]}...],
//    "controls": [{"node": int, "input": int}...],
//    "metadata": {...}}           (optional, written by the generators)
// Keys appear in that order; edges and controls are in canonical order, so
// serialization is byte-identical for equal hypergraphs. read/write round
// trips are exact.
Json hypergraph_to_json(const DirectedHypergraph& h,
                        const Json* metadata = nullptr);
DirectedHypergraph hypergraph_from_json(const Json& j, Json* metadata_out = nullptr);

std::string write_hypergraph(const DirectedHypergraph& h,
                             const Json* metadata = nullptr);
DirectedHypergraph read_hypergraph(const std::string& text,
                                   Json* metadata_out = nullptr);

void save_hypergraph_file(const DirectedHypergraph& h, const std::string& path,
                          const Json* metadata = nullptr);
DirectedHypergraph load_hypergraph_file(const std::string& path,
                                        Json* metadata_out = nullptr);

}  // namespace hsc
