#include "khoflow/json_io.hpp"

#include "khoflow/bitvec.hpp"
#include "khoflow/errors.hpp"

namespace khoflow {

namespace {

Json label_object(const std::map<int, Label>& labels) {
    Json out = Json::object();
    for (const auto& [id, lab] : labels)
        out[std::to_string(id)] = lab == Label::plus ? "+" : "-";
    return out;
}

Json generator_object(const LabeledGenerator& g) {
    Json out = Json::object();
    out["vertex"] = bitvec_str(g.gen.config.vertex);
    out["labels"] = label_object(g.gen.labels);
    out["gr_h"] = g.gr_h;
    out["gr_q"] = g.gr_q;
    return out;
}

// Strict field access used by the skeleton importer.
const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw SyntaxError(std::string("skeleton JSON lacks field '") + name + "'");
    return j.at(name);
}

}  // namespace

Json homology_to_json(const HomologyTable& table) {
    Json doc = Json::object();
    doc["schema"] = kHomologySchema;
    Json entries = Json::array();
    for (const auto& [ij, h] : table.entries) {
        Json e = Json::object();
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["free_rank"] = h.free_rank;
        Json tor = Json::array();
        for (const BigInt& t : h.torsion) tor.push_back(t.str());
        e["torsion"] = std::move(tor);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

Json polynomial_to_json(const Laurent& p, const std::string& variable) {
    Json doc = Json::object();
    doc["schema"] = kPolynomialSchema;
    doc["variable"] = variable;
    Json terms = Json::array();
    for (const auto& [e, c] : p.coeff) {
        Json t = Json::object();
        t["exponent"] = e;
        t["coefficient"] = c.str();
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

Json generators_to_json(const std::vector<LabeledGenerator>& gens) {
    Json doc = Json::object();
    doc["schema"] = kGeneratorsSchema;
    doc["count"] = gens.size();
    Json list = Json::array();
    for (const LabeledGenerator& g : gens) list.push_back(generator_object(g));
    doc["generators"] = std::move(list);
    return doc;
}

Json complex_to_json(const BigradedComplex& cx) {
    Json doc = Json::object();
    doc["schema"] = kComplexSchema;
    Json gens = Json::array();
    for (const LabeledGenerator& g : cx.generators) gens.push_back(generator_object(g));
    doc["generators"] = std::move(gens);
    Json blocks = Json::array();
    for (const auto& [j, by_i] : cx.diff)
        for (const auto& [i, m] : by_i) {
            Json b = Json::object();
            b["j"] = j;
            b["i"] = i;
            b["rows"] = m.rows;
            b["cols"] = m.cols;
            Json entries = Json::array();
            for (const Triplet& t : m.entries)
                entries.push_back(Json::array({t.row, t.col, t.val}));
            b["entries"] = std::move(entries);
            blocks.push_back(std::move(b));
        }
    doc["differential"] = std::move(blocks);
    return doc;
}

Json skeleton_to_json(const FlowCategorySkeleton& fc) {
    Json doc = Json::object();
    doc["schema"] = kSkeletonSchema;
    doc["objects"] = fc.objects;
    doc["mu"] = fc.mu;
    Json counts = Json::array();
    for (const auto& [ab, c] : fc.counts) {
        Json e = Json::object();
        e["above"] = ab.first;
        e["below"] = ab.second;
        e["count"] = c;
        counts.push_back(std::move(e));
    }
    doc["counts"] = std::move(counts);
    Json rel = Json::array();
    for (const auto& [a, b] : fc.relation) rel.push_back(Json::array({a, b}));
    doc["relation"] = std::move(rel);
    return doc;
}

FlowCategorySkeleton skeleton_from_json(const Json& j) {
    FlowCategorySkeleton fc;
    const Json& objects = field(j, "objects");
    const Json& mu = field(j, "mu");
    if (!objects.is_array() || !mu.is_array() || objects.size() != mu.size())
        throw SyntaxError("skeleton JSON: 'objects' and 'mu' must be arrays of equal length");
    for (const Json& o : objects) {
        if (!o.is_string()) throw SyntaxError("skeleton JSON: object names must be strings");
        fc.objects.push_back(o.get<std::string>());
    }
    for (const Json& m : mu) {
        if (!m.is_number_integer()) throw SyntaxError("skeleton JSON: 'mu' must hold integers");
        fc.mu.push_back(m.get<int>());
    }
    const int n = static_cast<int>(fc.objects.size());
    auto check_id = [&](const Json& v, const char* where) {
        if (!v.is_number_integer())
            throw SyntaxError(std::string("skeleton JSON: ") + where + " must be an integer");
        const long long id = v.get<long long>();
        if (id < 0 || id >= n)
            throw SyntaxError(std::string("skeleton JSON: ") + where + " out of range");
        return static_cast<int>(id);
    };
    for (const Json& e : field(j, "counts")) {
        const int above = check_id(field(e, "above"), "'above'");
        const int below = check_id(field(e, "below"), "'below'");
        const Json& c = field(e, "count");
        if (!c.is_number_integer())
            throw SyntaxError("skeleton JSON: 'count' must be an integer");
        fc.counts[{above, below}] = c.get<long long>();
    }
    for (const Json& e : field(j, "relation")) {
        if (!e.is_array() || e.size() != 2)
            throw SyntaxError("skeleton JSON: relation entries must be pairs");
        fc.relation.insert({check_id(e.at(0), "relation pair"),
                            check_id(e.at(1), "relation pair")});
    }
    return fc;
}

Json broken_flow_to_json(const BrokenFlowReport& rep, const FlowCategorySkeleton& fc) {
    auto name = [&](int id) -> std::string {
        if (id >= 0 && id < static_cast<int>(fc.objects.size()))
            return fc.objects[static_cast<std::size_t>(id)];
        return std::to_string(id);
    };
    Json doc = Json::object();
    doc["schema"] = kFlowReportSchema;
    doc["balanced"] = rep.balanced;
    Json pairs = Json::array();
    for (const BrokenPair& p : rep.pairs) {
        Json e = Json::object();
        e["above"] = p.above;
        e["above_name"] = name(p.above);
        e["below"] = p.below;
        e["below_name"] = name(p.below);
        Json legs = Json::array();
        for (const auto& [mid, c1, c2] : p.legs)
            legs.push_back(Json::array({mid, c1, c2}));
        e["legs"] = std::move(legs);
        e["signed_sum"] = p.signed_sum;
        pairs.push_back(std::move(e));
    }
    doc["pairs"] = std::move(pairs);
    return doc;
}

}  // namespace khoflow
