#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "khoflow/homology.hpp"
#include "khoflow/snf.hpp"

namespace khoflow {

// Combinatorial skeleton of a framed flow category: a finite set of graded
// objects, signed counts of rigid trajectories between objects one grading
// step apart, and the strict partial order recording which moduli spaces are
// nonempty.  The order is independent data because a count can vanish while
// trajectories still exist in cancelling pairs.
struct FlowCategorySkeleton {
    std::vector<std::string> objects;  // display names; the index is the id
    std::vector<int> mu;               // grading of each object
    // (above, below) -> signed trajectory count, for mu(above) == mu(below)+1.
    std::map<std::pair<int, int>, long long> counts;
    // Strict order: (a, b) present when the compactified space from a down to
    // b is nonempty.  Transitively closed.
    std::set<std::pair<int, int>> relation;

    bool operator==(const FlowCategorySkeleton&) const = default;
};

// A stratum of a compactified moduli space, encoded as the chain of objects a
// broken trajectory passes through: ids strictly descending in the order,
// first entry the top object, last the bottom.  The open stratum is the
// two-element chain; longer chains are deeper corners.
using Chain = std::vector<int>;

// Flow category of the n-dimensional resolution cube: objects are the
// vertices (named by their bit strings, id = lexicographic index), grading is
// the bit weight, counts are the standard edge signs, and the order is the
// coordinatewise strict order.  Throws DimensionError for n < 1, and
// ResourceError when n exceeds the cap.
FlowCategorySkeleton cube_flow_category(int n, int cap = 10);

// All broken-trajectory chains from a down to b, the open stratum included.
// Computed on demand: the full list across all pairs grows factorially, so it
// is never stored inside the skeleton.  Returns {{a}} when a == b; throws
// DimensionError for an id out of range.
std::vector<Chain> strata(const FlowCategorySkeleton& fc, int a, int b);

// The face poset of one compactified moduli space, self-contained so tests
// can corrupt it and re-run verification: it carries the gradings and the
// order restricted to the interval [b, a] alongside the strata themselves.
struct FacePoset {
    int top = 0;
    int bottom = 0;
    std::map<int, int> mu;                // gradings of the interval's objects
    std::set<std::pair<int, int>> order;  // strict order within the interval
    std::vector<Chain> strata;            // every chain from top to bottom

    bool operator==(const FacePoset&) const = default;
};

FacePoset build_face_poset(const FlowCategorySkeleton& fc, int a, int b);

// Which checks passed, and how the strata distribute over codimension.
struct FaceReport {
    int dimension = 0;                 // expected dimension of the open stratum
    std::map<int, int> strata_per_codim;
    int maximal_chains = 0;            // chains admitting no refinement
    bool ok = false;
};

// Structural verification that the poset looks like the corner structure of a
// manifold with faces: every chain runs from top to bottom and strictly
// descends; deleting any intermediate object from a stratum yields a stratum
// that is also present; a codimension-d stratum exposes exactly d distinct
// break gradings, and every sub-selection of its breaks is realised by a
// present stratum; every gap in a chain that the order allows to be refined
// is refined by a present stratum; no stratum is listed twice; and no stratum
// has negative dimension.  Throws AxiomViolation naming the offending
// stratum; returns the tally when everything holds.
FaceReport verify_face_axioms(const FacePoset& fp);

// Chain complex over the integers indexed by the grading: d[j] maps degree j
// to degree j-1.
struct ChainComplex {
    std::map<int, std::vector<int>> basis;  // degree -> object ids, ascending
    std::map<int, SparseMat> d;             // degree -> boundary matrix
};

// The chain complex generated by the skeleton's objects with boundary given
// by the trajectory counts.  Verifies d*d == 0 and throws ComplexError
// otherwise.
ChainComplex floer_complex(const FlowCategorySkeleton& fc);

// Integral homology of such a complex, degree by degree.  Only nonzero
// entries appear.
std::map<int, HomologyEntry> chain_homology(const ChainComplex& cc);

// One grading-gap-two pair together with its broken trajectories through
// intermediate objects and the signed sum of count products.
struct BrokenPair {
    int above = 0;
    int below = 0;
    // (intermediate object, count above->mid, count mid->below)
    std::vector<std::tuple<int, long long, long long>> legs;
    long long signed_sum = 0;
};

// Report of the boundary-of-boundary computation done directly on the
// skeleton's counts.
struct BrokenFlowReport {
    std::vector<BrokenPair> pairs;  // every gap-two pair with at least one leg
    bool balanced = true;           // all signed sums vanish
};

// Never throws: unbalanced pairs are reported, not rejected, so a defective
// skeleton can be inspected.
BrokenFlowReport d_squared_from_boundary(const FlowCategorySkeleton& fc);

}  // namespace khoflow
