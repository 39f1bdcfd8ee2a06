#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topograph/invariants.hpp"

namespace topograph {

enum class Verdict { Confirmed, Refuted, NotApplicable, Inexact };

const char* verdict_name(Verdict v);

struct ClaimParams {
    int n = 0;
    std::optional<int> m;  // second ground-set size, product claims only
};

struct ClaimVerdict {
    std::string id;
    ClaimParams params;
    std::string predicted;
    std::string computed;
    Verdict verdict = Verdict::NotApplicable;
    std::string evidence;
    // Certificate behind the verdict (vertex indices in the checked graph),
    // e.g. the dominating set refuting JOIN-GAMMA. Empty when not meaningful.
    std::vector<int> witness;
};

struct Claim {
    std::string id;
    std::string statement;
    bool needs_m = false;
    std::function<bool(const ClaimParams&)> applies;
    std::string applicability;  // human-readable constraint
    std::function<ClaimVerdict(const ClaimParams&, const Budget&)> check;
};

// Solver-backed product claims are only evaluated up to this product order.
inline constexpr int kProductOrderCap = 64;

// The full registry, stable order, 21 claims.
const std::vector<Claim>& list_claims();

// Throws std::invalid_argument for an unknown id or a missing m on a product
// claim. Out-of-applicability parameters yield a NOT-APPLICABLE verdict.
ClaimVerdict check_claim(const std::string& id, int n,
                         std::optional<int> m = std::nullopt,
                         const Budget& budget = Budget::seconds(30));

// Every applicable claim at every n in [n_min, n_max]; product claims at all
// ordered pairs in range. Sorted by (claim id, n, m).
std::vector<ClaimVerdict> verify_all(int n_min, int n_max,
                                     const Budget& budget = Budget::seconds(30));

}  // namespace topograph
