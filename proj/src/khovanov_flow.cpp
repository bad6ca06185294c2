#include "khoflow/khovanov_flow.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "khoflow/errors.hpp"

namespace khoflow {

namespace {

// Resolutions of d at u and at every vertex reachable by raising some of the
// chosen bits, computed once per call.
class VertexCache {
public:
    explicit VertexCache(const LinkDiagram& d) : d_(d) {}

    const ResolutionConfiguration& at(const BitVec& u) {
        auto it = cache_.find(u);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(u, resolve(d_, u)).first->second;
    }

private:
    const LinkDiagram& d_;
    std::map<BitVec, ResolutionConfiguration> cache_;
};

BitVec raise_bits(const BitVec& u, const std::vector<int>& positions) {
    BitVec v = u;
    for (int p : positions) v[static_cast<std::size_t>(p)] = 1;
    return v;
}

}  // namespace

std::vector<DecoratedConfiguration> decorated_configs(const LinkDiagram& d,
                                                      const BitVec& u, int k) {
    const int n = static_cast<int>(d.crossings.size());
    if (static_cast<int>(u.size()) != n)
        throw DimensionError("vertex length does not match the crossing count");
    VertexCache cache(d);
    const ResolutionConfiguration& base = cache.at(u);
    const int arcs = static_cast<int>(base.arcs.size());
    if (k < 0 || k > arcs)
        throw DimensionError("requested " + std::to_string(k) + " arcs, only " +
                             std::to_string(arcs) + " available");

    // k-subsets of the arc list in lexicographic order.
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick;
    auto choose = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            subsets.push_back(pick);
            return;
        }
        for (int t = from; t < arcs; ++t) {
            pick.push_back(t);
            self(self, t + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);

    std::vector<DecoratedConfiguration> out;
    for (const std::vector<int>& sel : subsets) {
        std::vector<int> crossings_sel;
        for (int t : sel) crossings_sel.push_back(base.arcs[static_cast<std::size_t>(t)].crossing);

        ResolutionConfiguration restricted;
        restricted.diagram_fp = base.diagram_fp;
        restricted.vertex = base.vertex;
        restricted.circles = base.circles;
        for (int t : sel) restricted.arcs.push_back(base.arcs[static_cast<std::size_t>(t)]);

        const BitVec top = raise_bits(u, crossings_sel);
        const std::uint64_t nlab = 1ull << base.circles.size();
        for (std::uint64_t m = 0; m < nlab; ++m) {
            auto y = label_map(base.circles, m);

            // Layered chain search: fire the chosen arcs one at a time in
            // every order, carrying the labeling through the Frobenius rule.
            std::map<std::uint64_t, std::set<std::map<int, Label>>> layer;
            layer[0].insert(y);
            for (int step = 0; step < k; ++step) {
                std::map<std::uint64_t, std::set<std::map<int, Label>>> next;
                for (const auto& [mask, labelings] : layer) {
                    std::vector<int> fired;
                    for (int t = 0; t < k; ++t)
                        if (mask & (1ull << t))
                            fired.push_back(crossings_sel[static_cast<std::size_t>(t)]);
                    const BitVec v1 = raise_bits(u, fired);
                    const ResolutionConfiguration& c1 = cache.at(v1);
                    for (int t = 0; t < k; ++t) {
                        if (mask & (1ull << t)) continue;
                        const BitVec v2 =
                            raise_bits(v1, {crossings_sel[static_cast<std::size_t>(t)]});
                        const ResolutionConfiguration& c2 = cache.at(v2);
                        EdgeClass ec = classify_edge(c1, c2);
                        for (const auto& z : labelings)
                            for (auto& x : covering_labels(ec, c2, z))
                                next[mask | (1ull << t)].insert(std::move(x));
                    }
                }
                layer = std::move(next);
            }

            const std::uint64_t full = k == 0 ? 0 : (1ull << k) - 1;
            auto final_it = layer.find(full);
            if (final_it == layer.end()) continue;
            for (const auto& x : final_it->second) {
                DecoratedConfiguration dc;
                dc.config = restricted;
                dc.y = y;
                dc.x = x;
                dc.upper_vertex = top;
                dc.index = k;
                out.push_back(std::move(dc));
            }
        }
    }
    return out;
}

std::vector<IntervalEndpoint> interval_boundary(const LinkDiagram& d,
                                                const DecoratedConfiguration& dc) {
    if (dc.config.diagram_fp != d.fingerprint())
        throw DiagramMismatch("decorated configuration comes from a different diagram");
    if (dc.index != 2 || dc.config.arcs.size() != 2)
        throw IndexError("interval boundary needs an index-2 configuration");

    VertexCache cache(d);
    const BitVec& u = dc.config.vertex;
    const int a1 = dc.config.arcs[0].crossing;
    const int a2 = dc.config.arcs[1].crossing;
    const ResolutionConfiguration& cu = cache.at(u);
    const ResolutionConfiguration& ctop = cache.at(dc.upper_vertex);

    std::vector<IntervalEndpoint> out;
    for (int first : {a1, a2}) {
        const int second = first == a1 ? a2 : a1;
        const BitVec v1 = raise_bits(u, {first});
        const ResolutionConfiguration& c1 = cache.at(v1);
        EdgeClass ec1 = classify_edge(cu, c1);
        EdgeClass ec2 = classify_edge(c1, ctop);
        const int sign = s0_sign(v1, u) * s0_sign(dc.upper_vertex, v1);
        for (auto& z : covering_labels(ec1, c1, dc.y)) {
            bool reaches_x = false;
            for (auto& x : covering_labels(ec2, ctop, z))
                if (x == dc.x) {
                    reaches_x = true;
                    break;
                }
            if (!reaches_x) continue;
            IntervalEndpoint ep;
            ep.first_crossing = first;
            ep.mid.config.diagram_fp = c1.diagram_fp;
            ep.mid.config.vertex = c1.vertex;
            ep.mid.config.circles = c1.circles;
            for (const Arc& arc : c1.arcs)
                if (arc.crossing == second) ep.mid.config.arcs.push_back(arc);
            ep.mid.labels = std::move(z);
            ep.sign = sign;
            out.push_back(std::move(ep));
        }
    }
    return out;
}

FlowCategorySkeleton skeleton_from_complex(const BigradedComplex& cx) {
    FlowCategorySkeleton fc;
    const std::size_t gens = cx.generators.size();
    if (gens == 0) return fc;

    int min_h = cx.generators.front().gr_h;
    for (const LabeledGenerator& g : cx.generators) min_h = std::min(min_h, g.gr_h);
    for (std::size_t g = 0; g < gens; ++g) {
        std::ostringstream name;
        name << "g" << g << "(i=" << cx.generators[g].gr_h
             << ",j=" << cx.generators[g].gr_q << ")";
        fc.objects.push_back(name.str());
        fc.mu.push_back(cx.generators[g].gr_h - min_h);
    }

    // The cochain differential raises the grading, so its target sits above
    // its source in the flow order.
    for (const auto& [j, by_i] : cx.diff)
        for (const auto& [i, m] : by_i) {
            if (m.entries.empty()) continue;  // trailing shells have no target block
            const auto& src_block = cx.basis.at(j).at(i);
            const auto& tgt_block = cx.basis.at(j).at(i + 1);
            for (const Triplet& t : m.entries)
                fc.counts[{tgt_block[static_cast<std::size_t>(t.row)],
                           src_block[static_cast<std::size_t>(t.col)]}] = t.val;
        }

    // Transitive closure of the covering pairs, top-down through the DAG.
    std::map<int, std::vector<int>> down;
    for (const auto& [pair, cnt] : fc.counts) down[pair.first].push_back(pair.second);
    std::map<int, std::set<int>> reach;
    auto descend = [&](auto&& self, int a) -> const std::set<int>& {
        auto it = reach.find(a);
        if (it != reach.end()) return it->second;
        std::set<int> r;
        if (auto dn = down.find(a); dn != down.end())
            for (int b : dn->second) {
                r.insert(b);
                const std::set<int>& sub = self(self, b);
                r.insert(sub.begin(), sub.end());
            }
        return reach.emplace(a, std::move(r)).first->second;
    };
    for (std::size_t g = 0; g < gens; ++g)
        for (int b : descend(descend, static_cast<int>(g)))
            fc.relation.insert({static_cast<int>(g), b});
    return fc;
}

}  // namespace khoflow
