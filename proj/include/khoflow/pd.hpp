#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace khoflow {

// One crossing of a link diagram. The four incident strand-arc ids are
// listed counterclockwise starting from the incoming under-strand, so
// slot 0 / slot 2 carry the under-passage and slots 1 / 3 the over-passage.
struct Crossing {
    std::array<int, 4> incident{};

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented link diagram over positive strand-arc ids.
//
// Sign convention: a crossing is positive exactly when its over-strand
// arrives at slot 1 (the slot counterclockwise-next from the under-in slot).
// Over-strand directions are recovered by orientation propagation; see
// the README for the full grammar and the tie-break used for components
// that never pass under.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    std::vector<int> signs;         // +1 / -1, parallel to crossings
    std::vector<int> over_in_slot;  // 1 or 3: where the over-strand arrives
    int strand_count = 0;           // distinct strand-arc ids
    int n_plus = 0;
    int n_minus = 0;
    int unknot_components = 0;      // crossingless "U" components

    friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
        return a.crossings == b.crossings && a.over_in_slot == b.over_in_slot &&
               a.unknot_components == b.unknot_components;
    }

    // Stable content hash used to anchor derived objects to their diagram.
    std::uint64_t fingerprint() const;
};

// Parses the textual PD form: whitespace-separated terms `X(a,b,c,d)`, `U`,
// `R(k)`, with `%`-prefixed comment lines. Throws SyntaxError on malformed
// text and TopologyError on structurally invalid diagrams.
LinkDiagram parse_pd(const std::string& text);

// Switches every crossing (over <-> under). Involution; swaps n+ and n-.
LinkDiagram mirror(const LinkDiagram& d);

// Canonical one-line textual form; parse_pd(serialize_pd(d)) == d.
std::string serialize_pd(const LinkDiagram& d);

// Reorders the crossing list: crossing i of the result is crossing perm[i]
// of the input. Signs and orientations ride along unchanged.
LinkDiagram permute_crossings(const LinkDiagram& d, const std::vector<int>& perm);

}  // namespace khoflow
