#pragma once

#include <map>
#include <vector>

#include "khoflow/bitvec.hpp"
#include "khoflow/pd.hpp"
#include "khoflow/resolution.hpp"

namespace khoflow {

struct Triplet {
    int row = 0;
    int col = 0;
    int val = 0;
    friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<Triplet> entries;  // sorted by (col, row); at most one per cell
};

struct LabeledGenerator {
    LabeledConfiguration gen;
    int gr_h = 0;
    int gr_q = 0;
};

struct BuildOptions {
    int cube_cap = 16;  // refuse diagrams with more crossings than this
    int threads = 1;    // worker threads for cube enumeration; output independent
};

// The Khovanov complex, stored blockwise: the differential preserves the
// quantum grading j and raises the homological grading i by one, so each j
// carries its own chain of sparse matrices.
struct BigradedComplex {
    std::vector<LabeledGenerator> generators;              // canonical global order
    std::map<int, std::map<int, std::vector<int>>> basis;  // j -> i -> generator indices
    std::map<int, std::map<int, SparseMat>> diff;          // j -> i -> matrix into (i+1, j)
};

// All labeled resolution configurations of d with both gradings, ordered by
// cube vertex (lexicographic) and then by label vector (x_plus = 0 bit,
// circles in id order, first circle most significant).
std::vector<LabeledGenerator> generators(const LinkDiagram& d, const BuildOptions& opts = {});

// The canonical enumeration of labelings: binary counter over the circles in
// id order, smallest id most significant, x_plus encoded as 0.
std::map<int, Label> label_map(const std::vector<Circle>& circles, std::uint64_t m);
std::uint64_t label_index(const std::vector<Circle>& circles,
                          const std::map<int, Label>& labels);

// Sign of the cube edge v -> u (u one bit above v at position i):
// (-1)^(number of 1-bits of v before position i).
int s0_sign(const BitVec& u, const BitVec& v);

// Assemble the full signed differential of d.
BigradedComplex differential(const LinkDiagram& d, const BuildOptions& opts = {});

// True iff every consecutive product of differential matrices vanishes.
bool d_squared_check(const BigradedComplex& c);

}  // namespace khoflow
