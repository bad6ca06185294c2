#pragma once

// Independent cross-check routes used only by the test suite. These
// deliberately avoid the library's union-find circle construction and its
// Smith-normal-form rank computation: circles are traced by walking slot
// pairings occurrence by occurrence, ranks are taken over GF(2), and chain
// counts come from closed-form combinatorics.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "khoflow/pd.hpp"

namespace oracle {

// Partition of strand ids into circles for the resolution picked by u,
// traced at the level of the 4n crossing slots.
inline std::vector<std::set<int>> circle_partition(const khoflow::LinkDiagram& d,
                                                   const khoflow::BitVec& u) {
    const int n = static_cast<int>(d.crossings.size());
    std::map<int, std::vector<int>> sites;  // strand -> occurrence codes 4t+s
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < 4; ++s)
            sites[d.crossings[static_cast<std::size_t>(t)]
                      .incident[static_cast<std::size_t>(s)]]
                .push_back(4 * t + s);
    std::vector<int> strand_hop(static_cast<std::size_t>(4 * n), -1);
    std::vector<int> strand_at(static_cast<std::size_t>(4 * n), -1);
    for (const auto& [id, occ] : sites) {
        strand_hop[static_cast<std::size_t>(occ[0])] = occ[1];
        strand_hop[static_cast<std::size_t>(occ[1])] = occ[0];
        strand_at[static_cast<std::size_t>(occ[0])] = id;
        strand_at[static_cast<std::size_t>(occ[1])] = id;
    }
    auto pair_hop = [&](int o) {
        const int t = o / 4;
        const int s = o % 4;
        static const int zero_pair[4] = {3, 2, 1, 0};
        static const int one_pair[4] = {1, 0, 3, 2};
        return 4 * t + (u[static_cast<std::size_t>(t)] ? one_pair[s] : zero_pair[s]);
    };
    std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
    std::vector<std::set<int>> circles;
    for (int start = 0; start < 4 * n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::set<int> ids;
        int o = start;
        while (!seen[static_cast<std::size_t>(o)]) {
            seen[static_cast<std::size_t>(o)] = true;
            ids.insert(strand_at[static_cast<std::size_t>(o)]);
            const int p = pair_hop(o);
            seen[static_cast<std::size_t>(p)] = true;
            ids.insert(strand_at[static_cast<std::size_t>(p)]);
            o = strand_hop[static_cast<std::size_t>(p)];
        }
        circles.push_back(std::move(ids));
    }
    return circles;
}

inline int circle_count(const khoflow::LinkDiagram& d, const khoflow::BitVec& u) {
    return static_cast<int>(circle_partition(d, u).size()) + d.unknot_components;
}

// Rank over GF(2) by plain Gaussian elimination on a dense 0/1 copy.
inline int gf2_rank(std::vector<std::vector<int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] % 2 == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] % 2 == 0) continue;
            for (std::size_t j = col; j < cols; ++j) m[i][j] = (m[i][j] + m[row][j]) % 2;
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Stirling numbers of the second kind, S(n, k).
inline std::uint64_t stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1),
                                              std::vector<std::uint64_t>(
                                                  static_cast<std::size_t>(k + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                j * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Number to top-to-bottom chains of length k (k vertices) in the n-cube:
// chains 1 > a_2 > ... > a_{k-1} > 0 correspond to ordered partitions of the
// n coordinates into k-1 nonempty drop groups.
inline std::uint64_t cube_chain_count(int n, int k) {
    if (k < 2) return 0;
    return factorial(k - 1) * stirling2(n, k - 1);
}

}  // namespace oracle
