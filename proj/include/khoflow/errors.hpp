#pragma once

#include <stdexcept>
#include <string>

namespace khoflow {

// Error taxonomy shared by the whole engine. Every throw site uses one of
// these so the CLI can map failures onto stable exit codes.

struct SyntaxError : std::runtime_error {
    explicit SyntaxError(const std::string& m) : std::runtime_error(m) {}
};

// Structurally invalid diagram: a strand id not appearing exactly twice,
// contradictory orientation propagation, or a smoothing change that is
// neither a merge nor a split (non-planar input).
struct TopologyError : std::runtime_error {
    explicit TopologyError(const std::string& m) : std::runtime_error(m) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& m) : std::runtime_error(m) {}
};

struct BitError : std::runtime_error {
    explicit BitError(const std::string& m) : std::runtime_error(m) {}
};

struct DiagramMismatch : std::runtime_error {
    explicit DiagramMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& m) : std::runtime_error(m) {}
};

// d^2 != 0 or structurally inconsistent complex handed to homology.
struct ComplexError : std::runtime_error {
    explicit ComplexError(const std::string& m) : std::runtime_error(m) {}
};

struct DivisibilityError : std::runtime_error {
    explicit DivisibilityError(const std::string& m) : std::runtime_error(m) {}
};

struct IndexError : std::runtime_error {
    explicit IndexError(const std::string& m) : std::runtime_error(m) {}
};

// A face-poset axiom fails; the message names the offending stratum.
struct AxiomViolation : std::runtime_error {
    explicit AxiomViolation(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace khoflow
