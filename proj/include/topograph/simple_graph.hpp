#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topograph {

// Thrown when an input exceeds the practical limit of an exhaustive routine.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit undirected graph on vertices 0..order-1. Adjacency is stored as
// packed bit rows (64 vertices per word), symmetric and irreflexive.
class SimpleGraph {
public:
    explicit SimpleGraph(int order);

    int order() const { return order_; }
    int words() const { return words_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >>
                (v % 64)) & 1u;
    }

    int degree(int v) const;
    long long size() const;  // number of edges

    // Packed adjacency row of v, words() words.
    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {rows_.data() + static_cast<std::size_t>(v) * words_,
                static_cast<std::size_t>(words_)};
    }

    // Edge list with u < v, ascending lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_label(int v, std::string s);

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw std::out_of_range("vertex index out of range");
    }

    int order_;
    int words_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::string> labels_;
};

SimpleGraph complete_graph(int n);
SimpleGraph null_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complement_graph(const SimpleGraph& g);

}  // namespace topograph
