#include "khoflow/snf.hpp"

#include <algorithm>

namespace khoflow {

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Truncating quotient; any leftover remainder is strictly smaller than the
// pivot, so re-picking the minimal entry terminates.
BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace

DenseMat to_dense(const SparseMat& m) {
    DenseMat d(static_cast<std::size_t>(m.rows),
               std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
    for (const Triplet& t : m.entries)
        d[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] += t.val;
    return d;
}

SmithResult smith_normal_form(const SparseMat& m) { return smith_normal_form(to_dense(m)); }

SmithResult smith_normal_form(DenseMat a) {
    SmithResult res;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Locate the smallest nonzero entry of the trailing submatrix.
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (!found || big_abs(a[i][j]) < big_abs(a[pr][pc])) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        // Clear the pivot row and column; a nonzero remainder becomes the
        // new, strictly smaller pivot on the next pass.
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            BigInt q = quot(a[i][t], a[t][t]);
            for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            BigInt q = quot(a[t][j], a[t][t]);
            for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;

        // Pivot must divide the whole trailing block for the divisibility
        // chain; fold a bad row in and re-reduce.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    for (std::size_t k = 0; k < t; ++k) res.factors.push_back(big_abs(a[k][k]));
    res.rank = static_cast<int>(t);
    // Safety net: enforce the divisibility chain even if a future edit to
    // the elimination order breaks the invariant above.
    for (bool fixed = false; !fixed;) {
        fixed = true;
        for (std::size_t i = 0; i + 1 < res.factors.size(); ++i) {
            if (res.factors[i + 1] % res.factors[i] == 0) continue;
            BigInt g = gcd(res.factors[i], res.factors[i + 1]);
            BigInt l = res.factors[i] / g * res.factors[i + 1];
            res.factors[i] = g;
            res.factors[i + 1] = l;
            fixed = false;
        }
    }
    return res;
}

}  // namespace khoflow
