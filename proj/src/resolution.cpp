#include "khoflow/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "khoflow/errors.hpp"

namespace khoflow {

namespace {

// Union-find over strand ids (arbitrary positive integers).
struct StrandUnion {
    std::map<int, int> parent;
    void add(int x) {
        if (!parent.count(x)) parent[x] = x;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        add(a);
        add(b);
        parent[find(a)] = find(b);
    }
};

}  // namespace

ResolutionConfiguration resolve(const LinkDiagram& d, const BitVec& u) {
    if (u.size() != d.crossings.size())
        throw DimensionError("bit-vector length " + std::to_string(u.size()) +
                             " != crossing count " + std::to_string(d.crossings.size()));
    StrandUnion uf;
    int max_strand = 0;
    for (std::size_t t = 0; t < d.crossings.size(); ++t) {
        const auto& in = d.crossings[t].incident;
        max_strand = std::max({max_strand, in[0], in[1], in[2], in[3]});
        if (u[t] == 0) {
            uf.unite(in[0], in[3]);
            uf.unite(in[1], in[2]);
        } else {
            uf.unite(in[0], in[1]);
            uf.unite(in[2], in[3]);
        }
    }

    ResolutionConfiguration c;
    c.diagram_fp = d.fingerprint();
    c.vertex = u;

    std::map<int, std::vector<int>> classes;  // root -> members
    for (const auto& [id, _] : uf.parent) classes[uf.find(id)].push_back(id);
    std::map<int, Circle> by_id;
    std::map<int, int> circle_of;  // strand id -> circle id
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        Circle z{members.front(), members};
        for (int s : members) circle_of[s] = z.id;
        by_id[z.id] = std::move(z);
    }
    for (int k = 0; k < d.unknot_components; ++k) {
        Circle z{max_strand + 1 + k, {}};
        by_id[z.id] = std::move(z);
    }
    for (auto& [_, z] : by_id) c.circles.push_back(std::move(z));

    for (std::size_t t = 0; t < d.crossings.size(); ++t) {
        if (u[t] != 0) continue;
        const auto& in = d.crossings[t].incident;
        c.arcs.push_back({static_cast<int>(t), circle_of.at(in[0]), circle_of.at(in[1])});
    }
    return c;
}

EdgeClass classify_edge(const ResolutionConfiguration& cu, const ResolutionConfiguration& cv) {
    auto changed = [](const std::vector<Circle>& from, const std::vector<Circle>& other) {
        std::vector<int> ids;
        for (const Circle& z : from)
            if (std::find(other.begin(), other.end(), z) == other.end()) ids.push_back(z.id);
        return ids;
    };
    EdgeClass e;
    e.sources = changed(cu.circles, cv.circles);
    e.targets = changed(cv.circles, cu.circles);
    if (e.sources.size() == 2 && e.targets.size() == 1) {
        e.kind = EdgeKind::merge;
    } else if (e.sources.size() == 1 && e.targets.size() == 2) {
        e.kind = EdgeKind::split;
    } else {
        throw TopologyError("cube edge changes " + std::to_string(e.sources.size()) + " -> " +
                            std::to_string(e.targets.size()) +
                            " circles; expected a merge or a split");
    }
    return e;
}

EdgeClass edge_type(const LinkDiagram& d, const BitVec& u, int i) {
    if (u.size() != d.crossings.size()) throw DimensionError("bit-vector length mismatch");
    if (i < 0 || static_cast<std::size_t>(i) >= u.size())
        throw DimensionError("crossing index " + std::to_string(i) + " out of range");
    if (u[static_cast<std::size_t>(i)] != 0)
        throw BitError("crossing " + std::to_string(i) + " is already 1-resolved");
    BitVec v = u;
    v[static_cast<std::size_t>(i)] = 1;
    return classify_edge(resolve(d, u), resolve(d, v));
}

ResolutionConfiguration surgery(const LinkDiagram& d, const BitVec& u,
                                const std::vector<int>& arcs) {
    if (u.size() != d.crossings.size()) throw DimensionError("bit-vector length mismatch");
    BitVec v = u;
    for (int a : arcs) {
        if (a < 0 || static_cast<std::size_t>(a) >= u.size())
            throw DimensionError("arc index " + std::to_string(a) + " out of range");
        if (u[static_cast<std::size_t>(a)] != 0)
            throw BitError("arc " + std::to_string(a) + " is not 0-resolved");
        v[static_cast<std::size_t>(a)] = 1;
    }
    return resolve(d, v);
}

ResolutionConfiguration core(const ResolutionConfiguration& c) {
    std::set<int> touched;
    for (const Arc& a : c.arcs) {
        touched.insert(a.circle_a);
        touched.insert(a.circle_b);
    }
    ResolutionConfiguration out;
    out.diagram_fp = c.diagram_fp;
    out.vertex = c.vertex;
    out.arcs = c.arcs;
    for (const Circle& z : c.circles)
        if (touched.count(z.id)) out.circles.push_back(z);
    return out;
}

bool is_basic(const ResolutionConfiguration& c) { return core(c).circles == c.circles; }

bool covers(const LabeledConfiguration& e, const LabeledConfiguration& dd) {
    if (e.config.diagram_fp != dd.config.diagram_fp)
        throw DiagramMismatch("labeled configurations come from different diagrams");
    const BitVec& lo = e.config.vertex;
    const BitVec& hi = dd.config.vertex;
    if (lo.size() != hi.size())
        throw DiagramMismatch("labeled configurations live on different cubes");
    int flipped = 0;
    for (std::size_t k = 0; k < lo.size(); ++k) {
        if (lo[k] == hi[k]) continue;
        if (lo[k] == 1) return false;  // a bit dropped: not one step up
        ++flipped;
    }
    if (flipped != 1) return false;

    // Shared circles must keep their labels.
    for (const Circle& z : e.config.circles)
        if (std::find(dd.config.circles.begin(), dd.config.circles.end(), z) !=
            dd.config.circles.end())
            if (e.labels.at(z.id) != dd.labels.at(z.id)) return false;

    EdgeClass ec = classify_edge(e.config, dd.config);
    auto plus_count = [](const std::map<int, Label>& labels, const std::vector<int>& ids) {
        int k = 0;
        for (int id : ids) k += labels.at(id) == Label::plus ? 1 : 0;
        return k;
    };
    if (ec.kind == EdgeKind::merge) {
        int in_plus = plus_count(e.labels, ec.sources);
        Label out = dd.labels.at(ec.targets.front());
        if (in_plus == 2) return out == Label::plus;
        if (in_plus == 1) return out == Label::minus;
        return false;  // two minus circles never merge
    }
    Label in = e.labels.at(ec.sources.front());
    int out_plus = plus_count(dd.labels, ec.targets);
    if (in == Label::plus) return out_plus == 1;
    return out_plus == 0;
}

std::vector<std::map<int, Label>> covering_labels(const EdgeClass& ec,
                                                  const ResolutionConfiguration& cv,
                                                  const std::map<int, Label>& y) {
    // Labels carried over unchanged onto the circles untouched by the surgery.
    std::map<int, Label> base;
    for (const Circle& z : cv.circles)
        if (auto it = y.find(z.id);
            it != y.end() && std::find(ec.targets.begin(), ec.targets.end(), z.id) ==
                                 ec.targets.end())
            base[z.id] = it->second;

    std::vector<std::map<int, Label>> outs;
    if (ec.kind == EdgeKind::merge) {
        int in_plus = (y.at(ec.sources[0]) == Label::plus ? 1 : 0) +
                      (y.at(ec.sources[1]) == Label::plus ? 1 : 0);
        if (in_plus == 0) return outs;  // two minus circles never merge
        auto x = base;
        x[ec.targets[0]] = in_plus == 2 ? Label::plus : Label::minus;
        outs.push_back(std::move(x));
        return outs;
    }
    if (y.at(ec.sources[0]) == Label::plus) {
        for (int which = 0; which < 2; ++which) {
            auto x = base;
            x[ec.targets[0]] = which == 0 ? Label::plus : Label::minus;
            x[ec.targets[1]] = which == 0 ? Label::minus : Label::plus;
            outs.push_back(std::move(x));
        }
    } else {
        auto x = base;
        x[ec.targets[0]] = Label::minus;
        x[ec.targets[1]] = Label::minus;
        outs.push_back(std::move(x));
    }
    return outs;
}

}  // namespace khoflow
