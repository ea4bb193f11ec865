#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgemhd {

/// A basis blade e_{j1} ∧ ... ∧ e_{jl} (j1 < j2 < ... < jl) encoded as a
/// bitmask: bit i set means index i+1 participates. The empty mask is the
/// scalar blade. Popcount parity gives all wedge/contraction signs in O(1),
/// which is why everything downstream stays mask-based.
using BladeMask = std::uint64_t;

inline int blade_grade(BladeMask b) { return std::popcount(b); }

/// Sign of e_A ∧ e_B for disjoint masks: parity of the number of index pairs
/// (a in A, b in B) with a > b, i.e. the merge-sort inversion count.
inline int wedge_sign(BladeMask a, BladeMask b) {
    if (a & b) return 0;
    int swaps = 0;
    BladeMask rest = b;
    while (rest) {
        const int k = std::countr_zero(rest);
        swaps += std::popcount(a >> (k + 1));
        rest &= rest - 1;
    }
    return (swaps & 1) ? -1 : 1;
}

/// Sign of e_i ⌟ e_J when index bit i is contained in J:
/// (-1)^(number of J-indices below i).
inline int contract_sign(int bit, BladeMask j) {
    const int below = std::popcount(j & ((BladeMask(1) << bit) - 1));
    return (below & 1) ? -1 : 1;
}

/// All grade-l blades of an n-dimensional algebra, ascending mask order
/// (equals lexicographic order on the index lists).
inline std::vector<BladeMask> blades_of_grade(int n, int grade) {
    if (grade < 0 || grade > n)
        throw std::invalid_argument("blades_of_grade: grade out of range");
    std::vector<BladeMask> out;
    const BladeMask top = BladeMask(1) << n;
    for (BladeMask m = 0; m < top; ++m)
        if (std::popcount(m) == grade) out.push_back(m);
    return out;
}

inline BladeMask blade_from_indices(const std::vector<int>& indices, int n) {
    BladeMask m = 0;
    int prev = 0;
    for (int idx : indices) {
        if (idx <= prev || idx > n)
            throw std::invalid_argument("blade_from_indices: indices must be strictly increasing in 1..n");
        m |= BladeMask(1) << (idx - 1);
        prev = idx;
    }
    return m;
}

inline std::string blade_name(BladeMask m) {
    if (m == 0) return "1";
    std::string s = "e{";
    bool first = true;
    for (int i = 0; i < 64; ++i) {
        if (m & (BladeMask(1) << i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

} // namespace hodgemhd
