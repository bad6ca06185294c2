#pragma once

#include <map>
#include <vector>

#include "khoflow/bitvec.hpp"
#include "khoflow/complex.hpp"
#include "khoflow/flow_category.hpp"
#include "khoflow/pd.hpp"
#include "khoflow/resolution.hpp"

namespace khoflow {

// A decorated resolution configuration: the configuration at a cube vertex
// restricted to a chosen subset of its surgery arcs, a labeling y of the
// circles there, and a labeling x of the circles after all chosen surgeries
// have been performed.  Only label pairs connected by some chain of
// one-surgery coverings qualify.
struct DecoratedConfiguration {
    ResolutionConfiguration config;  // circles at the lower vertex, chosen arcs
    std::map<int, Label> y;          // labels before the surgeries
    std::map<int, Label> x;          // labels after all chosen surgeries
    BitVec upper_vertex;             // lower vertex with the chosen bits raised
    int index = 0;                   // number of chosen arcs

    bool operator==(const DecoratedConfiguration&) const = default;
};

// All decorated configurations of d at vertex u using exactly k of the
// available arcs.  Throws DimensionError when u has the wrong length or k
// exceeds the number of arcs.  Order is fixed: arc subsets in lexicographic
// order, then y as the canonical label counter, then x in map order.
std::vector<DecoratedConfiguration> decorated_configs(const LinkDiagram& d,
                                                      const BitVec& u, int k);

// One boundary point of the one-dimensional moduli of an index-2 decorated
// configuration: which arc fires first, the labeled configuration reached
// after that first surgery, and the product of the two edge signs.
struct IntervalEndpoint {
    int first_crossing = 0;
    LabeledConfiguration mid;
    int sign = 0;

    bool operator==(const IntervalEndpoint&) const = default;
};

// Enumerates the boundary of the interval attached to an index-2 decorated
// configuration: every intermediate labeling reachable by the first surgery
// and continuing to x by the second.  Throws IndexError unless the index is
// 2, and DiagramMismatch when dc does not come from d.
std::vector<IntervalEndpoint> interval_boundary(const LinkDiagram& d,
                                                const DecoratedConfiguration& dc);

// The flow-category skeleton of a Khovanov complex: objects are the
// generators, the grading is the homological grading shifted to start at
// zero, counts transpose the cochain differential (the object one step up is
// the differential's target), and the order is the transitive closure of the
// covering pairs.
FlowCategorySkeleton skeleton_from_complex(const BigradedComplex& cx);

}  // namespace khoflow
