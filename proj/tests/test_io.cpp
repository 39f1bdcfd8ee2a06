#include <doctest.h>

#include <nlohmann/json.hpp>

#include "topograph/io.hpp"

using namespace topograph;

TEST_CASE("topo edge list format") {
    const std::string text = topo_edge_list(TopoGraph(3));
    CHECK(text ==
          "# topograph n=3 order=6 size=6\n"
          "1 2\n"
          "1 4\n"
          "1 6\n"
          "2 4\n"
          "2 5\n"
          "3 4\n");
}

TEST_CASE("edge list round-trip reproduces the adjacency") {
    for (int n = 2; n <= 6; ++n) {
        const TopoGraph t(n);
        const auto parsed = parse_edge_list(topo_edge_list(t));
        const SimpleGraph direct = t.to_simple();
        REQUIRE(parsed.graph.order() == direct.order());
        for (std::size_t i = 0; i < parsed.ids.size(); ++i)
            CHECK(parsed.ids[i] == t.mask_of(static_cast<int>(i)));
        for (int i = 0; i < direct.order(); ++i)
            for (int j = i + 1; j < direct.order(); ++j)
                CHECK(parsed.graph.adjacent(i, j) == direct.adjacent(i, j));
    }
}

TEST_CASE("malformed edge lines are rejected") {
    CHECK_THROWS_AS(parse_edge_list("1 x\n"), std::invalid_argument);
}

TEST_CASE("dot export") {
    const std::string dot = topo_dot(TopoGraph(2), "g");
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("1 [label=\"{1}\"];") != std::string::npos);
    CHECK(dot.find("2 [label=\"{2}\"];") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("report json schema") {
    const TopoGraph t(3);
    const auto report = compute_report(t.to_simple(), Budget::seconds(30),
                                       topo_witness_order(t));
    const auto j = nlohmann::json::parse(report_json(report, 3, t.vertices()));
    CHECK(j["n"] == 3);
    CHECK(j["order"] == 6);
    CHECK(j["size"] == 6);
    CHECK(j["invariants"]["min_degree"] == 1);
    CHECK(j["invariants"]["max_degree"] == 3);
    CHECK(j["invariants"]["clique_number"] == 3);
    CHECK(j["invariants"]["independence_number"] == 3);
    CHECK(j["invariants"]["domination_number"] == 3);
    CHECK(j["invariants"]["radius"] == 2);
    CHECK(j["invariants"]["diameter"] == 3);
    CHECK(j["witnesses"]["dominating_set"] ==
          nlohmann::json::parse("[1,2,4]"));
    CHECK(j["exact"]["domination_number"] == true);
}

TEST_CASE("verdict csv rows") {
    const std::string csv4 = verdicts_csv(verify_all(4, 4));
    CHECK(csv4.find("claim,params,predicted,computed,verdict\n") == 0);
    CHECK(csv4.find("BETA-STATED,4,10,7,REFUTED\n") != std::string::npos);
    const std::string csv3 = verdicts_csv(verify_all(3, 3));
    CHECK(csv3.find("BETA-EQ-GAMMA,3,equal,equal,CONFIRMED\n") !=
          std::string::npos);
    CHECK(csv3.find("JOIN-GAMMA,3;3,3,2,REFUTED\n") != std::string::npos);
}

TEST_CASE("verdict text has a summary line") {
    const std::string text = verdicts_text(verify_all(2, 2));
    CHECK(text.find("confirmed=") != std::string::npos);
    CHECK(text.find("BETA-EXAMPLE [2] NOT-APPLICABLE") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
    const TopoGraph t(4);
    CHECK(topo_edge_list(t) == topo_edge_list(TopoGraph(4)));
    CHECK(topo_dot(t) == topo_dot(TopoGraph(4)));
    CHECK(topo_json(t) == topo_json(TopoGraph(4)));
}
