#include "khoflow/homology.hpp"

#include <algorithm>

#include "khoflow/errors.hpp"

namespace khoflow {

HomologyTable homology(const BigradedComplex& c) {
    if (!d_squared_check(c))
        throw ComplexError("differential does not square to zero; refusing to take homology");
    HomologyTable table;
    for (const auto& [j, by_i] : c.basis) {
        const auto jt = c.diff.find(j);
        for (const auto& [i, block] : by_i) {
            const int dim = static_cast<int>(block.size());
            int rank_out = 0;
            std::vector<BigInt> incoming_factors;
            if (jt != c.diff.end()) {
                if (auto out = jt->second.find(i); out != jt->second.end())
                    rank_out = smith_normal_form(out->second).rank;
                if (auto in = jt->second.find(i - 1); in != jt->second.end()) {
                    SmithResult s = smith_normal_form(in->second);
                    incoming_factors = std::move(s.factors);
                }
            }
            HomologyEntry h;
            const int rank_in = static_cast<int>(incoming_factors.size());
            h.free_rank = dim - rank_out - rank_in;
            for (const BigInt& f : incoming_factors)
                if (f > 1) h.torsion.push_back(f);
            if (!h.trivial()) table.entries[{i, j}] = std::move(h);
        }
    }
    return table;
}

Laurent graded_euler(const HomologyTable& h) {
    Laurent chi;
    for (const auto& [ij, entry] : h.entries) {
        const auto& [i, j] = ij;
        chi = chi + monomial(j, (i % 2 == 0 ? 1 : -1) * BigInt(entry.free_rank));
    }
    return chi;
}

Laurent graded_euler(const BigradedComplex& c) {
    Laurent chi;
    for (const LabeledGenerator& g : c.generators)
        chi = chi + monomial(g.gr_q, g.gr_h % 2 == 0 ? 1 : -1);
    return chi;
}

Laurent jones(const LinkDiagram& d, const BuildOptions& opts) {
    Laurent chi = graded_euler(homology(differential(d, opts)));
    Laurent delta = monomial(1) + monomial(-1);
    return divide_exact(chi, delta);
}

namespace {

// Occurrence-level circle tracer for the state sum: walks slot pairings and
// strand continuations, independent of the union-find route in resolve().
int trace_circles(const LinkDiagram& d, std::uint64_t state) {
    const int n = static_cast<int>(d.crossings.size());
    // Occurrence code: 4*crossing + slot. partner_by_strand[o]: the other
    // occurrence of the strand sitting at o.
    std::map<int, std::vector<int>> strand_sites;
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < 4; ++s)
            strand_sites[d.crossings[static_cast<std::size_t>(t)]
                             .incident[static_cast<std::size_t>(s)]]
                .push_back(4 * t + s);
    std::vector<int> strand_partner(static_cast<std::size_t>(4 * n), -1);
    for (const auto& [_, sites] : strand_sites) {
        strand_partner[static_cast<std::size_t>(sites[0])] = sites[1];
        strand_partner[static_cast<std::size_t>(sites[1])] = sites[0];
    }
    auto slot_partner = [&](int o) {
        const int t = o / 4;
        const int s = o % 4;
        const bool one = (state >> (n - 1 - t)) & 1;  // matches lex_vertex bit order
        // 0-resolution pairs slots {0,3} and {1,2}; 1-resolution {0,1} and {2,3}.
        int p;
        if (!one)
            p = s == 0 ? 3 : s == 3 ? 0 : s == 1 ? 2 : 1;
        else
            p = s == 0 ? 1 : s == 1 ? 0 : s == 2 ? 3 : 2;
        return 4 * t + p;
    };
    std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
    int circles = 0;
    for (int start = 0; start < 4 * n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++circles;
        int o = start;
        while (!seen[static_cast<std::size_t>(o)]) {
            seen[static_cast<std::size_t>(o)] = true;
            const int p = slot_partner(o);
            seen[static_cast<std::size_t>(p)] = true;
            o = strand_partner[static_cast<std::size_t>(p)];
        }
    }
    return circles + d.unknot_components;
}

}  // namespace

Laurent kauffman_jones(const LinkDiagram& d, int cap) {
    const int n = static_cast<int>(d.crossings.size());
    if (n > cap)
        throw ResourceError("diagram has " + std::to_string(n) +
                            " crossings, above the state-sum cap " + std::to_string(cap));
    // Bracket-style sum in the A variable: sum over all states of
    // A^(n - 2|u|) * delta^(circles), delta = -A^2 - A^-2, then the writhe
    // normalization A^(-3w) and the global sign (-1)^(n_minus + circles(0)).
    const Laurent delta_a = -(monomial(2) + monomial(-2));
    Laurent sum;
    for (std::uint64_t state = 0; state < (1ull << n); ++state) {
        int ones = 0;
        for (int t = 0; t < n; ++t) ones += (state >> t) & 1;
        Laurent term = monomial(n - 2 * ones);
        const int circles = trace_circles(d, state);
        for (int k = 0; k < circles; ++k) term = term * delta_a;
        sum = sum + term;
    }
    const int w = d.n_plus - d.n_minus;
    sum = sum * monomial(-3 * w);
    const int sign = (d.n_minus + trace_circles(d, 0)) % 2 == 0 ? 1 : -1;
    if (sign < 0) sum = -sum;
    // Substitute q = A^-2; every surviving exponent is even.
    Laurent chi;
    for (const auto& [e, c] : sum.coeff) {
        if (e % 2 != 0)
            throw ComplexError("state sum produced an odd exponent; conversion impossible");
        chi = chi + monomial(-e / 2, c);
    }
    Laurent delta_q = monomial(1) + monomial(-1);
    return divide_exact(chi, delta_q);
}

}  // namespace khoflow
