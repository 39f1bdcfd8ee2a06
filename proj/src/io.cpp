#include "topograph/io.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace topograph {

using ordered_json = nlohmann::ordered_json;

std::string topo_edge_list(const TopoGraph& g) {
    std::ostringstream out;
    const auto edges = [&] {
        std::vector<std::pair<Mask, Mask>> es;
        for (Mask u : g.vertices())
            for (Mask v : g.vertices())
                if (u < v && TopoGraph::is_adjacent(u, v)) es.emplace_back(u, v);
        std::sort(es.begin(), es.end());
        return es;
    }();
    out << "# topograph n=" << g.n() << " order=" << g.order()
        << " size=" << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

std::string edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << "# graph order=" << g.order() << " size=" << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

std::string topo_dot(const TopoGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Mask v : g.vertices())
        out << "  " << v << " [label=\"" << set_notation(v) << "\"];\n";
    for (Mask u : g.vertices())
        for (Mask v : g.vertices())
            if (u < v && TopoGraph::is_adjacent(u, v))
                out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string simple_dot(const SimpleGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

ParsedEdgeList parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<long long, long long>> edges;
    std::vector<long long> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("malformed edge line: " + line);
        edges.emplace_back(u, v);
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::map<long long, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i)
        index[ids[i]] = static_cast<int>(i);
    SimpleGraph g(static_cast<int>(ids.size()));
    for (auto [u, v] : edges) g.add_edge(index[u], index[v]);
    return {std::move(g), std::move(ids)};
}

std::string topo_json(const TopoGraph& g) {
    ordered_json j;
    j["n"] = g.n();
    j["order"] = g.order();
    ordered_json edges = ordered_json::array();
    for (Mask u : g.vertices())
        for (Mask v : g.vertices())
            if (u < v && TopoGraph::is_adjacent(u, v))
                edges.push_back({u, v});
    j["size"] = edges.size();
    j["vertices"] = g.vertices();
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

namespace {

std::vector<Mask> to_masks(const std::vector<int>& idxs,
                           const std::vector<Mask>& masks) {
    std::vector<Mask> out;
    out.reserve(idxs.size());
    for (int i : idxs)
        out.push_back(masks.empty() ? static_cast<Mask>(i) : masks[i]);
    return out;
}

std::string mask_list(const std::vector<int>& idxs,
                      const std::vector<Mask>& masks) {
    std::string s;
    for (std::size_t i = 0; i < idxs.size(); ++i) {
        if (i) s += ' ';
        s += masks.empty() ? std::to_string(idxs[i])
                           : set_notation(masks[idxs[i]]);
    }
    return s;
}

}  // namespace

std::string report_json(const InvariantReport& r, int n,
                        const std::vector<Mask>& masks) {
    ordered_json j;
    j["n"] = n;
    j["order"] = r.order;
    j["size"] = r.size;
    ordered_json inv;
    inv["min_degree"] = r.min_degree;
    inv["max_degree"] = r.max_degree;
    inv["clique_number"] = r.clique.value;
    inv["independence_number"] = r.independent.value;
    inv["domination_number"] = r.dominating.value;
    if (r.radius) inv["radius"] = *r.radius;
    if (r.diameter) inv["diameter"] = *r.diameter;
    inv["is_connected"] = r.is_connected;
    inv["component_count"] = r.component_count;
    inv["cut_vertices"] = to_masks(r.cut_verts, masks);
    inv["pendant_vertices"] = to_masks(r.pendants, masks);
    j["invariants"] = std::move(inv);
    ordered_json wit;
    wit["clique"] = to_masks(r.clique.witness, masks);
    wit["independent_set"] = to_masks(r.independent.witness, masks);
    wit["dominating_set"] = to_masks(r.dominating.witness, masks);
    j["witnesses"] = std::move(wit);
    ordered_json exact;
    exact["clique_number"] = r.clique.exact;
    exact["independence_number"] = r.independent.exact;
    exact["domination_number"] = r.dominating.exact;
    j["exact"] = std::move(exact);
    return j.dump(2) + "\n";
}

std::string report_text(const InvariantReport& r, int n,
                        const std::vector<Mask>& masks) {
    std::ostringstream out;
    out << "n: " << n << "\n";
    out << "order: " << r.order << "\n";
    out << "size: " << r.size << "\n";
    out << "min_degree: " << r.min_degree << "\n";
    out << "max_degree: " << r.max_degree << "\n";
    auto solver_line = [&](const char* name, const SolverResult& s) {
        out << name << ": " << s.value << (s.exact ? "" : " (inexact)") << "\n";
    };
    solver_line("clique_number", r.clique);
    solver_line("independence_number", r.independent);
    solver_line("domination_number", r.dominating);
    if (r.radius) out << "radius: " << *r.radius << "\n";
    if (r.diameter) out << "diameter: " << *r.diameter << "\n";
    out << "is_connected: " << (r.is_connected ? "true" : "false") << "\n";
    out << "component_count: " << r.component_count << "\n";
    out << "cut_vertices: " << mask_list(r.cut_verts, masks) << "\n";
    out << "pendant_vertices: " << mask_list(r.pendants, masks) << "\n";
    out << "clique_witness: " << mask_list(r.clique.witness, masks) << "\n";
    out << "independent_witness: " << mask_list(r.independent.witness, masks)
        << "\n";
    out << "dominating_witness: " << mask_list(r.dominating.witness, masks)
        << "\n";
    return out.str();
}

std::string claim_params_string(const ClaimParams& p) {
    std::string s = std::to_string(p.n);
    if (p.m) s += ";" + std::to_string(*p.m);
    return s;
}

namespace {

std::array<int, 4> verdict_counts(const std::vector<ClaimVerdict>& vs) {
    std::array<int, 4> counts{0, 0, 0, 0};
    for (const auto& v : vs) ++counts[static_cast<int>(v.verdict)];
    return counts;
}

std::string summary_line(const std::vector<ClaimVerdict>& vs) {
    const auto c = verdict_counts(vs);
    std::ostringstream out;
    out << "confirmed=" << c[0] << " refuted=" << c[1]
        << " not-applicable=" << c[2] << " inexact=" << c[3];
    return out.str();
}

}  // namespace

std::string verdicts_json(const std::vector<ClaimVerdict>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) {
        ordered_json j;
        j["claim"] = v.id;
        ordered_json params;
        params["n"] = v.params.n;
        if (v.params.m) params["m"] = *v.params.m;
        j["params"] = std::move(params);
        j["predicted"] = v.predicted;
        j["computed"] = v.computed;
        j["verdict"] = verdict_name(v.verdict);
        j["evidence"] = v.evidence;
        if (!v.witness.empty()) j["witness"] = v.witness;
        arr.push_back(std::move(j));
    }
    const auto c = verdict_counts(vs);
    ordered_json top;
    top["verdicts"] = std::move(arr);
    ordered_json summary;
    summary["confirmed"] = c[0];
    summary["refuted"] = c[1];
    summary["not_applicable"] = c[2];
    summary["inexact"] = c[3];
    top["summary"] = std::move(summary);
    return top.dump(2) + "\n";
}

std::string verdicts_csv(const std::vector<ClaimVerdict>& vs) {
    std::ostringstream out;
    out << "claim,params,predicted,computed,verdict\n";
    for (const auto& v : vs)
        out << v.id << "," << claim_params_string(v.params) << ","
            << v.predicted << "," << v.computed << ","
            << verdict_name(v.verdict) << "\n";
    return out.str();
}

std::string verdicts_text(const std::vector<ClaimVerdict>& vs) {
    std::ostringstream out;
    for (const auto& v : vs) {
        out << v.id << " [" << claim_params_string(v.params) << "] "
            << verdict_name(v.verdict);
        if (!v.predicted.empty() || !v.computed.empty())
            out << "  predicted: " << v.predicted
                << "  computed: " << v.computed;
        if (!v.evidence.empty()) out << "  (" << v.evidence << ")";
        out << "\n";
    }
    out << summary_line(vs) << "\n";
    return out.str();
}

}  // namespace topograph
