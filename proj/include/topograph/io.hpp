#pragma once

#include <string>
#include <vector>

#include "topograph/claims.hpp"
#include "topograph/invariants.hpp"
#include "topograph/simple_graph.hpp"
#include "topograph/topo_graph.hpp"

namespace topograph {

// Edge list: "# topograph n=<n> order=<2^n-2> size=<E>" header, then one
// "u v" line per edge with u < v as decimal masks, ascending lexicographic.
std::string topo_edge_list(const TopoGraph& g);

// Generic edge list for product results: "# graph order=<o> size=<E>" header,
// vertex indices as ids.
std::string edge_list(const SimpleGraph& g);

// DOT with decimal mask node ids and set-notation labels.
std::string topo_dot(const TopoGraph& g, const std::string& name = "topograph");

// DOT with index node ids; labels attached when present.
std::string simple_dot(const SimpleGraph& g, const std::string& name = "graph");

// Parse an edge list produced by topo_edge_list/edge_list. Header comments
// are ignored; vertex ids are the sorted distinct endpoint values.
// Returns the graph and the id of each vertex. Internal test path.
struct ParsedEdgeList {
    SimpleGraph graph;
    std::vector<long long> ids;
};
ParsedEdgeList parse_edge_list(const std::string& text);

std::string topo_json(const TopoGraph& g);

// InvariantReport serialization. `masks` (when nonempty) translates witness
// vertex indices to subset masks; used for topo graph reports.
std::string report_json(const InvariantReport& r, int n,
                        const std::vector<Mask>& masks);
std::string report_text(const InvariantReport& r, int n,
                        const std::vector<Mask>& masks);

std::string verdicts_json(const std::vector<ClaimVerdict>& vs);
std::string verdicts_csv(const std::vector<ClaimVerdict>& vs);
std::string verdicts_text(const std::vector<ClaimVerdict>& vs);

std::string claim_params_string(const ClaimParams& p);

}  // namespace topograph
