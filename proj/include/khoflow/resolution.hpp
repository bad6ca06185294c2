#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "khoflow/bitvec.hpp"
#include "khoflow/pd.hpp"

namespace khoflow {

// One circle of a resolved diagram: the sorted strand segments it traverses,
// canonically identified by the smallest of them. Crossingless unknot
// components get synthetic ids above every strand id and an empty segment
// list.
struct Circle {
    int id = 0;
    std::vector<int> strands;
    friend bool operator==(const Circle&, const Circle&) = default;
};

// Surgery arc at a 0-resolved crossing. Its endpoints touch the circle
// through the under-strand pair (circle_a) and the circle through the
// over-strand pair (circle_b); the two coincide when both pairs lie on one
// circle.
struct Arc {
    int crossing = 0;
    int circle_a = 0;
    int circle_b = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

struct ResolutionConfiguration {
    std::uint64_t diagram_fp = 0;
    BitVec vertex;
    std::vector<Circle> circles;  // sorted by id
    std::vector<Arc> arcs;        // sorted by crossing index
    friend bool operator==(const ResolutionConfiguration&, const ResolutionConfiguration&) =
        default;
};

enum class Label : std::uint8_t { plus, minus };

struct LabeledConfiguration {
    ResolutionConfiguration config;
    std::map<int, Label> labels;  // circle id -> label; one entry per circle
    friend bool operator==(const LabeledConfiguration&, const LabeledConfiguration&) = default;
};

enum class EdgeKind : std::uint8_t { merge, split };

// Classification of the cube edge u -> u + e_i: which circles fuse or divide.
struct EdgeClass {
    EdgeKind kind = EdgeKind::merge;
    std::vector<int> sources;  // changed circle ids at u (2 for merge, 1 for split)
    std::vector<int> targets;  // changed circle ids at u + e_i (1 for merge, 2 for split)
};

// Smooth every crossing per the bit-vector u (0: under-in joins the arc
// counterclockwise behind it; 1: the other pairing) and collect circles plus
// surgery arcs at the 0-resolved crossings.
ResolutionConfiguration resolve(const LinkDiagram& d, const BitVec& u);

// Classify the edge obtained by flipping bit i of u from 0 to 1.
EdgeClass edge_type(const LinkDiagram& d, const BitVec& u, int i);

// Same classification from two already-resolved configurations one bit apart.
EdgeClass classify_edge(const ResolutionConfiguration& cu, const ResolutionConfiguration& cv);

// Resolve after setting every bit listed in arcs (each must be 0-resolved in u).
ResolutionConfiguration surgery(const LinkDiagram& d, const BitVec& u,
                                const std::vector<int>& arcs);

// Drop the circles untouched by every arc; a configuration is basic when
// that removes nothing.
ResolutionConfiguration core(const ResolutionConfiguration& c);
bool is_basic(const ResolutionConfiguration& c);

// Single-surgery covering relation on labeled configurations over one
// diagram: dd sits one bit above e, shared circles keep their labels, and
// the changed circles obey the Frobenius label rule (merge: ++ -> +,
// mixed -> -, -- -> none; split: + -> one + one -, - -> both -).
bool covers(const LabeledConfiguration& e, const LabeledConfiguration& dd);

// Constructive form of the same rule: all labelings of the upper
// configuration cv covered by (lower labeling y) across the classified edge.
// Returns 0, 1, or 2 labelings.
std::vector<std::map<int, Label>> covering_labels(const EdgeClass& ec,
                                                  const ResolutionConfiguration& cv,
                                                  const std::map<int, Label>& y);

}  // namespace khoflow
