#include "topograph/products.hpp"

namespace topograph {

SimpleGraph corona(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw std::invalid_argument("corona operands must be nonempty");
    const int go = g.order(), ho = h.order();
    SimpleGraph r(go * (1 + ho));
    for (auto [u, v] : g.edges()) r.add_edge(u, v);
    for (int i = 0; i < go; ++i) {
        const int base = go + i * ho;
        for (int j = 0; j < ho; ++j) r.add_edge(i, base + j);
        for (auto [u, v] : h.edges()) r.add_edge(base + u, base + v);
    }
    if (g.has_labels() || h.has_labels()) {
        for (int i = 0; i < go; ++i) r.set_label(i, g.label(i));
        for (int i = 0; i < go; ++i)
            for (int j = 0; j < ho; ++j)
                r.set_label(go + i * ho + j, g.label(i) + "/" + h.label(j));
    }
    return r;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw std::invalid_argument("join operands must be nonempty");
    const int go = g.order(), ho = h.order();
    SimpleGraph r(go + ho);
    for (auto [u, v] : g.edges()) r.add_edge(u, v);
    for (auto [u, v] : h.edges()) r.add_edge(go + u, go + v);
    for (int u = 0; u < go; ++u)
        for (int v = 0; v < ho; ++v) r.add_edge(u, go + v);
    if (g.has_labels() || h.has_labels()) {
        for (int u = 0; u < go; ++u) r.set_label(u, "L:" + g.label(u));
        for (int v = 0; v < ho; ++v) r.set_label(go + v, "R:" + h.label(v));
    }
    return r;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& s) {
    if (s.empty())
        throw std::invalid_argument("induced subgraph needs a nonempty set");
    SimpleGraph r(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (g.has_labels()) r.set_label(static_cast<int>(i), g.label(s[i]));
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                r.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return r;
}

}  // namespace topograph
