#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "khoflow/complex.hpp"
#include "khoflow/flow_category.hpp"
#include "khoflow/homology.hpp"
#include "khoflow/laurent.hpp"

namespace khoflow {

// Ordered JSON keeps insertion order, so every serializer below emits
// byte-identical output for equal inputs.
using Json = nlohmann::ordered_json;

// Schema identifiers stamped into every document; the matching description
// files live under schemas/.
inline constexpr const char* kHomologySchema = "khoflow-homology-v1";
inline constexpr const char* kPolynomialSchema = "khoflow-polynomial-v1";
inline constexpr const char* kGeneratorsSchema = "khoflow-generators-v1";
inline constexpr const char* kComplexSchema = "khoflow-complex-v1";
inline constexpr const char* kSkeletonSchema = "khoflow-skeleton-v1";
inline constexpr const char* kFlowReportSchema = "khoflow-flowreport-v1";

Json homology_to_json(const HomologyTable& table);

Json polynomial_to_json(const Laurent& p, const std::string& variable = "q");

Json generators_to_json(const std::vector<LabeledGenerator>& gens);

Json complex_to_json(const BigradedComplex& cx);

Json skeleton_to_json(const FlowCategorySkeleton& fc);

// Inverse of skeleton_to_json; also accepts hand-written files.  Throws
// SyntaxError on missing fields, wrong types, out-of-range object indices,
// or mismatched array lengths.
FlowCategorySkeleton skeleton_from_json(const Json& j);

// Flow-report serialization; object names are taken from the skeleton the
// report was computed from.
Json broken_flow_to_json(const BrokenFlowReport& rep, const FlowCategorySkeleton& fc);

}  // namespace khoflow
