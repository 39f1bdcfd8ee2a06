#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "topograph/claims.hpp"
#include "topograph/invariants.hpp"
#include "topograph/io.hpp"
#include "topograph/products.hpp"
#include "topograph/topo_graph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitTimeout = 4;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + output_path);
    out << text;
}

// Operand syntax: topo:<n>
topograph::TopoGraph parse_operand(const std::string& s) {
    if (!s.starts_with("topo:"))
        throw usage_error("operand must be topo:<n>, got " + s);
    int n = 0;
    try {
        n = std::stoi(s.substr(5));
    } catch (const std::exception&) {
        throw usage_error("operand must be topo:<n>, got " + s);
    }
    return topograph::TopoGraph(n);
}

int run(int argc, char** argv) {
    using namespace topograph;

    CLI::App app{"discrete topological graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name
    double budget_seconds = 30.0;
    std::string format;
    std::string output;
    unsigned seed = 0;  // reserved; the exact solvers ignore it
    app.add_option("--budget-seconds", budget_seconds,
                   "time limit per solver invocation")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "dot|edges|json|csv|text");
    app.add_option("--output", output, "output file (default stdout)");
    app.add_option("--seed", seed, "random seed (reserved)");

    int n = 0, n_min = 0, n_max = 0;
    std::string op, left, right, invariant;

    auto* build = app.add_subcommand("build", "construct G_tau and export it");
    build->add_option("--n", n, "ground set size")->required();

    auto* inv = app.add_subcommand("invariants", "full invariant report");
    inv->add_option("--n", n, "ground set size")->required();

    auto* verify = app.add_subcommand("verify", "adjudicate the registered claims");
    verify->add_option("--n-min", n_min, "smallest ground set size")->required();
    verify->add_option("--n-max", n_max, "largest ground set size")->required();

    auto* compose = app.add_subcommand("compose", "corona/join products");
    compose->add_option("--op", op, "corona|join")->required();
    compose->add_option("--left", left, "left operand, topo:<n>")->required();
    compose->add_option("--right", right, "right operand, topo:<n>")->required();
    compose->add_option("--invariant", invariant,
                        "domination|independence|clique");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    const Budget budget = Budget::seconds(budget_seconds);

    if (build->parsed()) {
        if (format.empty()) format = "edges";
        const TopoGraph g(n);
        if (format == "edges" || format == "text")
            emit(topo_edge_list(g), output);
        else if (format == "dot")
            emit(topo_dot(g, "topograph_n" + std::to_string(n)), output);
        else if (format == "json")
            emit(topo_json(g), output);
        else
            throw usage_error("build supports formats dot|edges|json|text");
        return kExitOk;
    }

    if (inv->parsed()) {
        if (format.empty()) format = "text";
        const TopoGraph g(n);
        const auto report =
            compute_report(g.to_simple(), budget, topo_witness_order(g));
        if (format == "json")
            emit(report_json(report, n, g.vertices()), output);
        else if (format == "text")
            emit(report_text(report, n, g.vertices()), output);
        else
            throw usage_error("invariants supports formats json|text");
        return kExitOk;
    }

    if (verify->parsed()) {
        if (format.empty()) format = "text";
        const auto verdicts = verify_all(n_min, n_max, budget);
        if (format == "csv")
            emit(verdicts_csv(verdicts), output);
        else if (format == "json")
            emit(verdicts_json(verdicts), output);
        else if (format == "text")
            emit(verdicts_text(verdicts), output);
        else
            throw usage_error("verify supports formats csv|json|text");
        return kExitOk;
    }

    // compose
    if (op != "corona" && op != "join")
        throw usage_error("--op must be corona or join");
    const SimpleGraph lg = parse_operand(left).to_simple();
    const SimpleGraph rg = parse_operand(right).to_simple();
    const SimpleGraph prod =
        op == "corona" ? corona(lg, rg) : join(lg, rg);

    if (invariant.empty()) {
        if (format.empty()) format = "edges";
        if (format == "edges" || format == "text")
            emit(edge_list(prod), output);
        else if (format == "dot")
            emit(simple_dot(prod, op), output);
        else
            throw usage_error("compose supports formats dot|edges|text");
        return kExitOk;
    }

    SolverResult result;
    if (invariant == "domination")
        result = domination_number(prod, budget);
    else if (invariant == "independence")
        result = independence_number(prod, budget);
    else if (invariant == "clique")
        result = clique_number(prod, budget);
    else
        throw usage_error("--invariant must be domination|independence|clique");

    if (!result.exact && result.witness.empty()) return kExitTimeout;
    if (format.empty() || format == "text") {
        emit(std::to_string(result.value) +
                 (result.exact ? "" : " (inexact)") + "\n",
             output);
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["op"] = op;
        j["left"] = left;
        j["right"] = right;
        j["order"] = prod.order();
        j["size"] = prod.size();
        j["invariant"] = invariant;
        j["value"] = result.value;
        j["exact"] = result.exact;
        j["witness"] = result.witness;
        emit(j.dump(2) + "\n", output);
    } else {
        throw usage_error("compose --invariant supports formats json|text");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const topograph::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::out_of_range& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
