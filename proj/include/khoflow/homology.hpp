#pragma once

#include <map>
#include <utility>
#include <vector>

#include "khoflow/complex.hpp"
#include "khoflow/laurent.hpp"
#include "khoflow/snf.hpp"

namespace khoflow {

struct HomologyEntry {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyEntry&, const HomologyEntry&) = default;
};

// Bigraded homology groups keyed by (homological, quantum) degree; only
// nonzero groups are stored.
struct HomologyTable {
    std::map<std::pair<int, int>, HomologyEntry> entries;
    friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

// Exact integral homology per bidegree via Smith normal form; requires the
// complex axiom and throws ComplexError otherwise.
HomologyTable homology(const BigradedComplex& c);

// Alternating rank sum over the table, and the same invariant read off the
// chain level; a free complex makes the two routes agree exactly.
Laurent graded_euler(const HomologyTable& h);
Laurent graded_euler(const BigradedComplex& c);

// Jones polynomial through the homology route: the graded Euler
// characteristic divided (exactly) by q + q^-1.
Laurent jones(const LinkDiagram& d, const BuildOptions& opts = {});

// Independent state-sum route: bracket polynomial over all resolutions with
// its own circle tracer, writhe-normalized and converted to the q variable.
Laurent kauffman_jones(const LinkDiagram& d, int cap = 16);

}  // namespace khoflow
