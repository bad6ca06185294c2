#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace khoflow {

// Cube vertex: one bit per crossing, index 0 first. Lexicographic order on
// the vector (bit 0 most significant) is the canonical enumeration order.
using BitVec = std::vector<std::uint8_t>;

inline int weight(const BitVec& u) {
    int w = 0;
    for (auto b : u) w += b ? 1 : 0;
    return w;
}

// k-th vertex of the n-cube in lexicographic order, k in [0, 2^n).
inline BitVec lex_vertex(int n, std::uint64_t k) {
    BitVec u(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        u[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((k >> (n - 1 - i)) & 1u);
    return u;
}

inline std::uint64_t lex_index(const BitVec& u) {
    std::uint64_t k = 0;
    for (auto b : u) k = (k << 1) | (b ? 1u : 0u);
    return k;
}

inline std::string bitvec_str(const BitVec& u) {
    std::string s;
    s.reserve(u.size());
    for (auto b : u) s.push_back(b ? '1' : '0');
    return s;
}

// Position of the unique flipped 0->1 bit between v and u, or -1 when the
// pair is not a cube edge with u above v.
inline int edge_bit(const BitVec& u, const BitVec& v) {
    if (u.size() != v.size()) return -1;
    int pos = -1;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v[i]) continue;
        if (v[i] == 1 || pos >= 0) return -1;
        pos = static_cast<int>(i);
    }
    return pos;
}

}  // namespace khoflow
