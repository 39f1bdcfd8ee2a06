#include <doctest.h>

#include "topograph/oracle.hpp"
#include "topograph/products.hpp"
#include "topograph/topo_graph.hpp"

using namespace topograph;

namespace {

std::vector<int> singleton_indices(const TopoGraph& t) {
    std::vector<int> out;
    for (int i = 0; i < t.order(); ++i)
        if (popcount(t.mask_of(i)) == 1) out.push_back(i);
    return out;
}

}  // namespace

TEST_CASE("independence oracle") {
    CHECK(oracle_max_independent(TopoGraph(3).to_simple()) == 3);
    CHECK(oracle_max_independent(TopoGraph(4).to_simple()) == 7);
    CHECK(oracle_max_independent(complete_graph(2)) == 1);
    CHECK(oracle_max_independent(null_graph(5)) == 5);
}

TEST_CASE("domination oracle") {
    CHECK(oracle_min_dominating(TopoGraph(2).to_simple()) == 1);
    CHECK(oracle_min_dominating(TopoGraph(3).to_simple()) == 3);
    CHECK(oracle_min_dominating(TopoGraph(4).to_simple()) == 4);
    CHECK(oracle_min_dominating(complete_graph(2)) == 1);
    const SimpleGraph g3 = TopoGraph(3).to_simple();
    CHECK(oracle_min_dominating(join(g3, g3)) == 2);
    CHECK(oracle_min_dominating(corona(g3, TopoGraph(2).to_simple())) == 6);
}

TEST_CASE("clique oracle") {
    CHECK(oracle_max_clique(TopoGraph(2).to_simple()) == 2);
    CHECK(oracle_max_clique(TopoGraph(3).to_simple()) == 3);
    CHECK(oracle_max_clique(TopoGraph(4).to_simple()) == 4);
    CHECK(oracle_max_clique(null_graph(4)) == 1);
}

TEST_CASE("articulation oracle") {
    const TopoGraph t3(3), t4(4);
    CHECK(oracle_articulation(t3.to_simple()) == singleton_indices(t3));
    CHECK(oracle_articulation(t4.to_simple()) == singleton_indices(t4));
    CHECK(oracle_articulation(cycle_graph(5)).empty());
    CHECK(oracle_articulation(complete_graph(2)).empty());
}

TEST_CASE("distance oracle") {
    const TopoGraph t3(3);
    const auto d3 = oracle_all_pairs_distances(t3.to_simple());
    CHECK(d3[t3.index_of(0b011)][t3.index_of(0b101)] == 3);  // {1,2} to {1,3}
    const TopoGraph t4(4);
    const auto d4 = oracle_all_pairs_distances(t4.to_simple());
    CHECK(d4[t4.index_of(0b0001)][t4.index_of(0b0010)] == 1);  // {1} to {2}
    CHECK(d4[t4.index_of(0b0011)][t4.index_of(0b1101)] == 3);  // {1,2} to {1,3,4}
    // disconnected pairs report -1
    const auto dn = oracle_all_pairs_distances(null_graph(3));
    CHECK(dn[0][1] == -1);
    CHECK(dn[0][0] == 0);
}

TEST_CASE("oracles refuse inputs above their caps") {
    CHECK_THROWS_AS(oracle_max_independent(null_graph(25)), capacity_error);
    CHECK_THROWS_AS(oracle_min_dominating(complete_graph(25)), capacity_error);
    CHECK_THROWS_AS(oracle_max_clique(null_graph(25)), capacity_error);
    CHECK_THROWS_AS(oracle_articulation(complete_graph(201)), capacity_error);
    CHECK_THROWS_AS(oracle_all_pairs_distances(null_graph(501)),
                    capacity_error);
}
