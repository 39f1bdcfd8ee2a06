#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace topograph {

// A vertex is a nonempty proper subset of {1,...,n}, stored as a bitmask:
// bit i-1 set <=> element i is a member.
using Mask = std::uint32_t;

struct GroundSet {
    int n;

    explicit GroundSet(int n_) : n(n_) {
        if (n < 2 || n > 16)
            throw std::out_of_range("ground set size must be in [2, 16], got " +
                                    std::to_string(n));
    }

    Mask full() const { return (Mask{1} << n) - 1; }
};

inline int popcount(Mask m) { return std::popcount(m); }

// Set notation for a mask, elements ascending: "{1,3}".
inline std::string set_notation(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (m & (Mask{1} << i)) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    }
    s += '}';
    return s;
}

}  // namespace topograph
