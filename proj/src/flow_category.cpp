#include "khoflow/flow_category.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include "khoflow/bitvec.hpp"
#include "khoflow/complex.hpp"
#include "khoflow/errors.hpp"

namespace khoflow {

namespace {

std::string chain_str(const Chain& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) os << " > ";
        os << c[k];
    }
    os << ")";
    return os.str();
}

void check_object(const FlowCategorySkeleton& fc, int a) {
    if (a < 0 || a >= static_cast<int>(fc.objects.size()))
        throw DimensionError("object id out of range: " + std::to_string(a));
}

}  // namespace

FlowCategorySkeleton cube_flow_category(int n, int cap) {
    if (n < 1) throw DimensionError("cube flow category needs n >= 1");
    if (n > cap)
        throw ResourceError("cube dimension " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    FlowCategorySkeleton fc;
    const std::uint64_t verts = 1ull << n;
    fc.objects.reserve(verts);
    fc.mu.reserve(verts);
    for (std::uint64_t k = 0; k < verts; ++k) {
        BitVec u = lex_vertex(n, k);
        fc.objects.push_back(bitvec_str(u));
        fc.mu.push_back(weight(u));
    }
    for (std::uint64_t k = 0; k < verts; ++k) {
        BitVec u = lex_vertex(n, k);
        for (int i = 0; i < n; ++i) {
            if (u[static_cast<std::size_t>(i)] == 0) continue;
            const std::uint64_t k2 = k & ~(1ull << (n - 1 - i));
            BitVec v = lex_vertex(n, k2);
            fc.counts[{static_cast<int>(k), static_cast<int>(k2)}] =
                s0_sign(u, v);
        }
    }
    for (std::uint64_t ka = 0; ka < verts; ++ka)
        for (std::uint64_t kb = 0; kb < verts; ++kb)
            if (ka != kb && (ka & kb) == kb)
                fc.relation.insert({static_cast<int>(ka), static_cast<int>(kb)});
    return fc;
}

std::vector<Chain> strata(const FlowCategorySkeleton& fc, int a, int b) {
    check_object(fc, a);
    check_object(fc, b);
    if (a == b) return {{a}};
    if (!fc.relation.count({a, b})) return {};

    // Objects strictly between b and a in the order, in id order.
    std::vector<int> mid;
    for (int x = 0; x < static_cast<int>(fc.objects.size()); ++x)
        if (fc.relation.count({a, x}) && fc.relation.count({x, b}))
            mid.push_back(x);

    std::vector<Chain> out;
    Chain path{a};
    // Depth-first: extend with any smaller element still above b, or close
    // off at b.  Candidates ascend in id, so the output order is fixed.
    auto dfs = [&](auto&& self, int cur) -> void {
        if (fc.relation.count({cur, b})) {
            path.push_back(b);
            out.push_back(path);
            path.pop_back();
        }
        for (int x : mid) {
            if (!fc.relation.count({cur, x})) continue;
            path.push_back(x);
            self(self, x);
            path.pop_back();
        }
    };
    dfs(dfs, a);
    return out;
}

FacePoset build_face_poset(const FlowCategorySkeleton& fc, int a, int b) {
    check_object(fc, a);
    check_object(fc, b);
    FacePoset fp;
    fp.top = a;
    fp.bottom = b;
    std::vector<int> members{a};
    if (b != a) members.push_back(b);
    for (int x = 0; x < static_cast<int>(fc.objects.size()); ++x)
        if (fc.relation.count({a, x}) && fc.relation.count({x, b}))
            members.push_back(x);
    for (int x : members) fp.mu[x] = fc.mu[static_cast<std::size_t>(x)];
    for (int x : members)
        for (int y : members)
            if (fc.relation.count({x, y})) fp.order.insert({x, y});
    fp.strata = strata(fc, a, b);
    return fp;
}

FaceReport verify_face_axioms(const FacePoset& fp) {
    FaceReport rep;
    if (fp.strata.empty())
        throw AxiomViolation("no strata between " + std::to_string(fp.top) +
                             " and " + std::to_string(fp.bottom));
    if (fp.top == fp.bottom) {
        if (fp.strata.size() != 1 || fp.strata.front() != Chain{fp.top})
            throw AxiomViolation("degenerate pair carries a nontrivial stratum");
        rep.dimension = 0;
        rep.strata_per_codim[0] = 1;
        rep.maximal_chains = 1;
        rep.ok = true;
        return rep;
    }

    auto mu_of = [&](int x) -> int {
        auto it = fp.mu.find(x);
        if (it == fp.mu.end())
            throw AxiomViolation("object " + std::to_string(x) +
                                 " has no grading in the poset");
        return it->second;
    };
    const int kdim = mu_of(fp.top) - mu_of(fp.bottom) - 1;
    if (kdim < 0)
        throw AxiomViolation("grading does not decrease from " +
                             std::to_string(fp.top) + " to " +
                             std::to_string(fp.bottom));
    rep.dimension = kdim;

    std::set<Chain> present(fp.strata.begin(), fp.strata.end());
    if (present.size() != fp.strata.size())
        throw AxiomViolation("duplicate stratum listed");
    if (!present.count(Chain{fp.top, fp.bottom}))
        throw AxiomViolation("open stratum missing");

    // Everything strictly between bottom and top, for refinement scans.
    std::vector<int> mid;
    for (const auto& [x, g] : fp.mu)
        if (x != fp.top && x != fp.bottom) mid.push_back(x);

    for (const Chain& c : fp.strata) {
        const std::string where = "stratum " + chain_str(c);
        if (c.size() < 2 || c.front() != fp.top || c.back() != fp.bottom)
            throw AxiomViolation(where + " does not run from top to bottom");
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            if (!fp.order.count({c[k], c[k + 1]}))
                throw AxiomViolation(where + " is not descending in the order");
            if (mu_of(c[k]) <= mu_of(c[k + 1]))
                throw AxiomViolation(where + " does not descend in grading");
        }
        const int codim = static_cast<int>(c.size()) - 2;
        if (kdim - codim < 0)
            throw AxiomViolation(where + " has negative dimension");

        // Break gradings are the face labels; strict descent makes them
        // distinct, so the stratum meets exactly codim many faces.
        std::set<int> labels;
        for (std::size_t k = 1; k + 1 < c.size(); ++k)
            labels.insert(mu_of(c[k]) - mu_of(fp.bottom));
        if (static_cast<int>(labels.size()) != codim)
            throw AxiomViolation(where + " repeats a break grading");

        // Erasing any single break must land on a present stratum.
        for (std::size_t k = 1; k + 1 < c.size(); ++k) {
            Chain shorter;
            for (std::size_t t = 0; t < c.size(); ++t)
                if (t != k) shorter.push_back(c[t]);
            if (!present.count(shorter))
                throw AxiomViolation(where + " lacks its face " +
                                     chain_str(shorter));
        }

        // Pairwise corners: any two breaks alone also bound a stratum.
        for (std::size_t k = 1; k + 1 < c.size(); ++k)
            for (std::size_t t = k + 1; t + 1 < c.size(); ++t) {
                Chain corner{fp.top, c[k], c[t], fp.bottom};
                if (!present.count(corner))
                    throw AxiomViolation(where + " lacks the corner " +
                                         chain_str(corner));
            }

        // Any refinement the order admits must itself be present.
        bool maximal = true;
        for (std::size_t k = 0; k + 1 < c.size(); ++k)
            for (int x : mid) {
                if (!fp.order.count({c[k], x}) ||
                    !fp.order.count({x, c[k + 1]}))
                    continue;
                maximal = false;
                Chain finer(c.begin(), c.begin() + static_cast<long>(k) + 1);
                finer.push_back(x);
                finer.insert(finer.end(), c.begin() + static_cast<long>(k) + 1,
                             c.end());
                if (!present.count(finer))
                    throw AxiomViolation(where + " lacks the refinement " +
                                         chain_str(finer));
            }
        if (maximal) ++rep.maximal_chains;
        ++rep.strata_per_codim[codim];
    }

    rep.ok = true;
    return rep;
}

ChainComplex floer_complex(const FlowCategorySkeleton& fc) {
    ChainComplex cc;
    for (int x = 0; x < static_cast<int>(fc.objects.size()); ++x)
        cc.basis[fc.mu[static_cast<std::size_t>(x)]].push_back(x);

    // Position of each object inside its degree block.
    std::vector<int> pos(fc.objects.size(), 0);
    for (const auto& [j, block] : cc.basis)
        for (std::size_t k = 0; k < block.size(); ++k)
            pos[static_cast<std::size_t>(block[k])] = static_cast<int>(k);

    for (const auto& [j, block] : cc.basis) {
        auto below = cc.basis.find(j - 1);
        if (below == cc.basis.end()) continue;
        SparseMat m;
        m.rows = static_cast<int>(below->second.size());
        m.cols = static_cast<int>(block.size());
        cc.d[j] = std::move(m);
    }
    for (const auto& [pair, cnt] : fc.counts) {
        const auto [a, b] = pair;
        check_object(fc, a);
        check_object(fc, b);
        const int ja = fc.mu[static_cast<std::size_t>(a)];
        if (ja != fc.mu[static_cast<std::size_t>(b)] + 1)
            throw ComplexError("count on a pair with grading gap != 1");
        if (cnt == 0) continue;
        if (cnt > std::numeric_limits<int>::max() ||
            cnt < std::numeric_limits<int>::min())
            throw ResourceError("trajectory count does not fit a matrix entry");
        cc.d[ja].entries.push_back({pos[static_cast<std::size_t>(b)],
                                    pos[static_cast<std::size_t>(a)],
                                    static_cast<int>(cnt)});
    }
    for (auto& [j, m] : cc.d)
        std::sort(m.entries.begin(), m.entries.end(),
                  [](const Triplet& x, const Triplet& y) {
                      return std::tie(x.col, x.row) < std::tie(y.col, y.row);
                  });

    // Boundary squared must vanish degree by degree.
    for (const auto& [j, upper] : cc.d) {
        auto lowerIt = cc.d.find(j - 1);
        if (lowerIt == cc.d.end()) continue;
        const SparseMat& lower = lowerIt->second;
        std::map<int, std::vector<std::pair<int, long long>>> by_col;
        for (const Triplet& t : lower.entries)
            by_col[t.col].push_back({t.row, t.val});
        std::map<int, std::map<int, long long>> acc;  // col -> row -> sum
        for (const Triplet& t : upper.entries) {
            auto it = by_col.find(t.row);
            if (it == by_col.end()) continue;
            for (const auto& [r, v] : it->second) acc[t.col][r] += t.val * v;
        }
        for (const auto& [c, col] : acc)
            for (const auto& [r, v] : col)
                if (v != 0)
                    throw ComplexError(
                        "boundary squared is nonzero between degrees " +
                        std::to_string(j) + " and " + std::to_string(j - 2));
    }
    return cc;
}

std::map<int, HomologyEntry> chain_homology(const ChainComplex& cc) {
    std::map<int, HomologyEntry> out;
    for (const auto& [j, block] : cc.basis) {
        const int dim = static_cast<int>(block.size());
        int rank_out = 0;
        if (auto it = cc.d.find(j); it != cc.d.end())
            rank_out = smith_normal_form(it->second).rank;
        HomologyEntry h;
        int rank_in = 0;
        if (auto it = cc.d.find(j + 1); it != cc.d.end()) {
            SmithResult s = smith_normal_form(it->second);
            rank_in = s.rank;
            for (const BigInt& f : s.factors)
                if (f > 1) h.torsion.push_back(f);
        }
        h.free_rank = dim - rank_out - rank_in;
        if (!h.trivial()) out[j] = h;
    }
    return out;
}

BrokenFlowReport d_squared_from_boundary(const FlowCategorySkeleton& fc) {
    std::map<int, std::vector<std::pair<int, long long>>> below;
    for (const auto& [pair, cnt] : fc.counts)
        below[pair.first].push_back({pair.second, cnt});

    std::map<std::pair<int, int>,
             std::vector<std::tuple<int, long long, long long>>>
        legs;
    for (const auto& [a, outs] : below)
        for (const auto& [m, c1] : outs) {
            auto it = below.find(m);
            if (it == below.end()) continue;
            for (const auto& [c, c2] : it->second)
                legs[{a, c}].push_back({m, c1, c2});
        }

    BrokenFlowReport rep;
    for (auto& [pair, chain_list] : legs) {
        BrokenPair bp;
        bp.above = pair.first;
        bp.below = pair.second;
        std::sort(chain_list.begin(), chain_list.end());
        bp.legs = chain_list;
        for (const auto& [m, c1, c2] : chain_list) bp.signed_sum += c1 * c2;
        if (bp.signed_sum != 0) rep.balanced = false;
        rep.pairs.push_back(std::move(bp));
    }
    return rep;
}

}  // namespace khoflow
