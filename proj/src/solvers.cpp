#include <algorithm>
#include <chrono>
#include <cstdint>

#include "topograph/invariants.hpp"

namespace topograph {

namespace {

using Clock = std::chrono::steady_clock;
using Words = std::vector<std::uint64_t>;

struct Deadline {
    std::optional<Clock::time_point> at;

    explicit Deadline(const Budget& b) {
        if (b.limit) at = Clock::now() + *b.limit;
    }
    bool expired() const { return at && Clock::now() >= *at; }
};

bool test_bit(const Words& w, int v) { return (w[v / 64] >> (v % 64)) & 1u; }
void set_bit(Words& w, int v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
void clear_bit(Words& w, int v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

bool any_bit(const Words& w) {
    for (auto x : w)
        if (x) return true;
    return false;
}

int first_bit(const Words& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i) * 64 + std::countr_zero(w[i]);
    return -1;
}

template <class F>
void for_each_bit(const Words& w, F&& f) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t bits = w[i];
        while (bits) {
            f(static_cast<int>(i) * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
}

Words copy_row(const SimpleGraph& g, int v) {
    auto r = g.row(v);
    return Words(r.begin(), r.end());
}

// --- maximum clique, Tomita-style coloring branch and bound ---------------

struct CliqueSearch {
    const SimpleGraph& g;
    std::vector<Words> adj;
    Deadline deadline;
    std::vector<int> best, cur;
    bool exact = true;

    CliqueSearch(const SimpleGraph& graph, const Budget& budget)
        : g(graph), deadline(budget) {
        adj.reserve(g.order());
        for (int v = 0; v < g.order(); ++v) adj.push_back(copy_row(g, v));
    }

    void expand(Words& cand) {
        if (deadline.expired()) {
            exact = false;
            return;
        }
        // Greedy coloring of the candidate set; color = upper bound for the
        // clique extendable through that vertex.
        std::vector<int> order, bound;
        {
            Words rest = cand;
            int color = 0;
            while (any_bit(rest)) {
                ++color;
                Words cls = rest;
                while (any_bit(cls)) {
                    const int v = first_bit(cls);
                    clear_bit(cls, v);
                    clear_bit(rest, v);
                    for (std::size_t i = 0; i < cls.size(); ++i)
                        cls[i] &= ~adj[v][i];
                    order.push_back(v);
                    bound.push_back(color);
                }
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (!exact) return;
            if (static_cast<int>(cur.size()) + bound[i] <=
                static_cast<int>(best.size()))
                return;
            const int v = order[i];
            cur.push_back(v);
            Words next(cand.size());
            for (std::size_t k = 0; k < cand.size(); ++k)
                next[k] = cand[k] & adj[v][k];
            if (any_bit(next)) {
                expand(next);
            } else if (cur.size() > best.size()) {
                best = cur;
            }
            cur.pop_back();
            clear_bit(cand, v);
        }
    }

    SolverResult run() {
        if (g.order() == 0) return {0, {}, true};
        Words cand(g.words(), 0);
        for (int v = 0; v < g.order(); ++v) set_bit(cand, v);
        // Seed with a greedy clique so a timeout still reports a witness.
        {
            Words avail = cand;
            while (any_bit(avail)) {
                const int v = first_bit(avail);
                best.push_back(v);
                for (std::size_t i = 0; i < avail.size(); ++i)
                    avail[i] &= adj[v][i];
            }
        }
        expand(cand);
        std::sort(best.begin(), best.end());
        return {static_cast<int>(best.size()), best, exact};
    }
};

// --- minimum dominating set, set-cover branch and bound -------------------

struct DominationSearch {
    const SimpleGraph& g;
    int n, words;
    std::vector<Words> closed;  // closed neighborhoods
    Words full;
    Deadline deadline;
    std::vector<int> best, cur;
    bool exact = true;

    DominationSearch(const SimpleGraph& graph, const Budget& budget)
        : g(graph), n(graph.order()), words(graph.words()), deadline(budget) {
        closed.reserve(n);
        for (int v = 0; v < n; ++v) {
            Words c = copy_row(g, v);
            set_bit(c, v);
            closed.push_back(std::move(c));
        }
        full.assign(words, 0);
        for (int v = 0; v < n; ++v) set_bit(full, v);
    }

    bool covered_all(const Words& covered) const {
        for (int i = 0; i < words; ++i)
            if (covered[i] != full[i]) return false;
        return true;
    }

    // Disjoint closed neighborhoods of uncovered vertices: each needs its
    // own dominator, so their count bounds the remaining work from below.
    int packing_bound(const Words& covered, const Words* allowed) const {
        Words blocked(words, 0);
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if (test_bit(covered, v)) continue;
            bool disjoint = true;
            for (int i = 0; i < words && disjoint; ++i) {
                std::uint64_t dominators = closed[v][i];
                if (allowed) dominators &= (*allowed)[i];
                if (dominators & blocked[i]) disjoint = false;
            }
            if (!disjoint) continue;
            ++count;
            for (int i = 0; i < words; ++i) {
                std::uint64_t dominators = closed[v][i];
                if (allowed) dominators &= (*allowed)[i];
                blocked[i] |= dominators;
            }
        }
        return count;
    }

    // Uncovered vertex with the fewest dominators; -1 when all covered,
    // -2 when some vertex has none (infeasible under `allowed`).
    int pick_vertex(const Words& covered, const Words* allowed) const {
        int pick = -1, fewest = n + 1;
        for (int v = 0; v < n; ++v) {
            if (test_bit(covered, v)) continue;
            int cnt = 0;
            for (int i = 0; i < words; ++i) {
                std::uint64_t dominators = closed[v][i];
                if (allowed) dominators &= (*allowed)[i];
                cnt += std::popcount(dominators);
            }
            if (cnt == 0) return -2;
            if (cnt < fewest) {
                fewest = cnt;
                pick = v;
            }
        }
        return pick;
    }

    void minimize(const Words& covered) {
        if (deadline.expired()) {
            exact = false;
            return;
        }
        if (covered_all(covered)) {
            if (cur.size() < best.size()) best = cur;
            return;
        }
        if (static_cast<int>(cur.size()) + packing_bound(covered, nullptr) >=
            static_cast<int>(best.size()))
            return;
        const int u = pick_vertex(covered, nullptr);
        std::vector<int> branch;
        for_each_bit(closed[u], [&](int v) { branch.push_back(v); });
        for (int v : branch) {
            if (!exact) return;
            cur.push_back(v);
            Words next = covered;
            for (int i = 0; i < words; ++i) next[i] |= closed[v][i];
            minimize(next);
            cur.pop_back();
        }
    }

    // Is there a dominating completion of size <= slots inside `allowed`?
    bool feasible(const Words& covered, const Words& allowed, int slots) {
        if (covered_all(covered)) return true;
        if (slots == 0) return false;
        if (deadline.expired()) {
            exact = false;
            return false;
        }
        if (packing_bound(covered, &allowed) > slots) return false;
        const int u = pick_vertex(covered, &allowed);
        if (u == -2) return false;
        bool result = false;
        for_each_bit(closed[u], [&](int v) {
            if (result || !test_bit(allowed, v)) return;
            Words next = covered;
            for (int i = 0; i < words; ++i) next[i] |= closed[v][i];
            Words rest = allowed;
            clear_bit(rest, v);
            if (feasible(next, rest, slots - 1)) result = true;
        });
        return result;
    }

    // Lexicographically least gamma-set under `order` (a permutation of the
    // vertices; position in `order` is the comparison rank).
    std::vector<int> lex_least(int gamma, std::span<const int> order) {
        std::vector<int> chosen;
        Words covered(words, 0);
        int last_pos = -1;
        for (int slot = 0; slot < gamma; ++slot) {
            bool placed = false;
            for (int pos = last_pos + 1; pos < n && !placed; ++pos) {
                const int v = order[pos];
                Words next = covered;
                for (int i = 0; i < words; ++i) next[i] |= closed[v][i];
                Words allowed(words, 0);
                for (int p = pos + 1; p < n; ++p) set_bit(allowed, order[p]);
                if (feasible(next, allowed, gamma - slot - 1)) {
                    chosen.push_back(v);
                    covered = next;
                    last_pos = pos;
                    placed = true;
                }
                if (!exact) return {};
            }
            if (!placed) return {};  // cannot happen when gamma is exact
        }
        return chosen;
    }

    SolverResult run(std::span<const int> tie_order) {
        if (n == 0) return {0, {}, true};
        // Greedy max-coverage upper bound; also the timeout fallback witness.
        {
            Words covered(words, 0);
            while (!covered_all(covered)) {
                int pick = -1, gain = -1;
                for (int v = 0; v < n; ++v) {
                    int c = 0;
                    for (int i = 0; i < words; ++i)
                        c += std::popcount(closed[v][i] & ~covered[i]);
                    if (c > gain) {
                        gain = c;
                        pick = v;
                    }
                }
                best.push_back(pick);
                for (int i = 0; i < words; ++i) covered[i] |= closed[pick][i];
            }
        }
        minimize(Words(words, 0));
        std::sort(best.begin(), best.end());
        if (!exact)
            return {static_cast<int>(best.size()), best, false};

        std::vector<int> order(tie_order.begin(), tie_order.end());
        if (order.empty()) {
            order.resize(n);
            for (int i = 0; i < n; ++i) order[i] = i;
        }
        auto lex = lex_least(static_cast<int>(best.size()), order);
        if (!lex.empty()) {
            std::sort(lex.begin(), lex.end());
            best = lex;
        }
        // A budget lapse during the lex pass leaves the value exact; only the
        // witness falls back to the first optimum found.
        return {static_cast<int>(best.size()), best, true};
    }
};

}  // namespace

SolverResult clique_number(const SimpleGraph& g, const Budget& budget) {
    return CliqueSearch(g, budget).run();
}

SolverResult independence_number(const SimpleGraph& g, const Budget& budget) {
    return CliqueSearch(complement_graph(g), budget).run();
}

SolverResult domination_number(const SimpleGraph& g, const Budget& budget,
                               std::span<const int> tie_order) {
    return DominationSearch(g, budget).run(tie_order);
}

}  // namespace topograph
