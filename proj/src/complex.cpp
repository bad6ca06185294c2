#include "khoflow/complex.hpp"

#include <algorithm>
#include <thread>

#include "khoflow/errors.hpp"

namespace khoflow {

std::map<int, Label> label_map(const std::vector<Circle>& circles, std::uint64_t m) {
    std::map<int, Label> labels;
    const std::size_t c = circles.size();
    for (std::size_t p = 0; p < c; ++p)
        labels[circles[p].id] =
            (m >> (c - 1 - p)) & 1 ? Label::minus : Label::plus;
    return labels;
}

std::uint64_t label_index(const std::vector<Circle>& circles,
                          const std::map<int, Label>& labels) {
    std::uint64_t m = 0;
    const std::size_t c = circles.size();
    for (std::size_t p = 0; p < c; ++p)
        if (labels.at(circles[p].id) == Label::minus) m |= 1ull << (c - 1 - p);
    return m;
}

namespace {

void check_cap(const LinkDiagram& d, const BuildOptions& opts) {
    if (static_cast<int>(d.crossings.size()) > opts.cube_cap)
        throw ResourceError("diagram has " + std::to_string(d.crossings.size()) +
                            " crossings, above the cube cap " + std::to_string(opts.cube_cap));
}

struct CubeData {
    std::vector<ResolutionConfiguration> configs;  // per lex vertex index
    std::vector<std::uint64_t> offset;             // first global generator per vertex
    std::uint64_t total = 0;
};

CubeData build_cube(const LinkDiagram& d, const BuildOptions& opts) {
    const int n = static_cast<int>(d.crossings.size());
    CubeData cube;
    const std::uint64_t verts = 1ull << n;
    cube.configs.resize(verts);

    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t k = lo; k < hi; ++k) cube.configs[k] = resolve(d, lex_vertex(n, k));
    };
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        work(0, verts);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (verts + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = std::min(verts, chunk * t);
            std::uint64_t hi = std::min(verts, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    cube.offset.resize(verts);
    for (std::uint64_t k = 0; k < verts; ++k) {
        cube.offset[k] = cube.total;
        cube.total += 1ull << cube.configs[k].circles.size();
    }
    return cube;
}

std::vector<LabeledGenerator> build_gens(const LinkDiagram& d, const CubeData& cube) {
    std::vector<LabeledGenerator> gens;
    gens.reserve(cube.total);
    for (std::uint64_t k = 0; k < cube.configs.size(); ++k) {
        const ResolutionConfiguration& cfg = cube.configs[k];
        const int w = weight(cfg.vertex);
        const int circles = static_cast<int>(cfg.circles.size());
        for (std::uint64_t m = 0; m < (1ull << circles); ++m) {
            LabeledGenerator g;
            g.gen.config = cfg;
            g.gen.labels = label_map(cfg.circles, m);
            int plus = 0;
            for (const auto& [_, lab] : g.gen.labels) plus += lab == Label::plus ? 1 : -1;
            g.gr_h = -d.n_minus + w;
            g.gr_q = d.n_plus - 2 * d.n_minus + w + plus;
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

}  // namespace

std::vector<LabeledGenerator> generators(const LinkDiagram& d, const BuildOptions& opts) {
    check_cap(d, opts);
    return build_gens(d, build_cube(d, opts));
}

int s0_sign(const BitVec& u, const BitVec& v) {
    int i = edge_bit(u, v);
    if (i < 0) throw BitError("not a cube edge: vertices do not differ in exactly one raised bit");
    int ones = 0;
    for (int k = 0; k < i; ++k) ones += v[static_cast<std::size_t>(k)];
    return ones % 2 == 0 ? 1 : -1;
}

BigradedComplex differential(const LinkDiagram& d, const BuildOptions& opts) {
    check_cap(d, opts);
    const int n = static_cast<int>(d.crossings.size());
    CubeData cube = build_cube(d, opts);

    BigradedComplex cx;
    cx.generators = build_gens(d, cube);

    // Global index -> position inside its (j, i) block, filling basis lists
    // in canonical order.
    std::vector<int> pos_in_block(cx.generators.size());
    for (std::size_t g = 0; g < cx.generators.size(); ++g) {
        auto& block = cx.basis[cx.generators[g].gr_q][cx.generators[g].gr_h];
        pos_in_block[g] = static_cast<int>(block.size());
        block.push_back(static_cast<int>(g));
    }

    // Per lower vertex: all signed coverings out of it, as global index
    // pairs. Workers fill disjoint slots; assembly order is fixed.
    struct Hit {
        std::uint64_t src;
        std::uint64_t tgt;
        int sign;
    };
    const std::uint64_t verts = 1ull << n;
    std::vector<std::vector<Hit>> hits(verts);

    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t k = lo; k < hi; ++k) {
            const ResolutionConfiguration& cu = cube.configs[k];
            const BitVec& v = cu.vertex;
            for (int i = 0; i < n; ++i) {
                if (v[static_cast<std::size_t>(i)] != 0) continue;
                const std::uint64_t k2 = k | (1ull << (n - 1 - i));
                const ResolutionConfiguration& cv = cube.configs[k2];
                EdgeClass ec = classify_edge(cu, cv);
                const int sign = s0_sign(cv.vertex, v);
                const std::uint64_t nlab = 1ull << cu.circles.size();
                for (std::uint64_t m = 0; m < nlab; ++m) {
                    auto y = label_map(cu.circles, m);
                    auto outs = covering_labels(ec, cv, y);
                    const std::uint64_t src = cube.offset[k] + m;
                    for (const auto& x : outs)
                        hits[k].push_back(
                            {src, cube.offset[k2] + label_index(cv.circles, x), sign});
                }
            }
        }
    };
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        work(0, verts);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (verts + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = std::min(verts, chunk * t);
            std::uint64_t hi = std::min(verts, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // Matrix shells for every consecutive (i, i+1) pair inside each j.
    for (const auto& [j, by_i] : cx.basis)
        for (const auto& [i, block] : by_i) {
            auto next = by_i.find(i + 1);
            SparseMat m;
            m.cols = static_cast<int>(block.size());
            m.rows = next == by_i.end() ? 0 : static_cast<int>(next->second.size());
            cx.diff[j][i] = std::move(m);
        }

    for (std::uint64_t k = 0; k < verts; ++k)
        for (const Hit& h : hits[k]) {
            const LabeledGenerator& src = cx.generators[h.src];
            cx.diff[src.gr_q][src.gr_h].entries.push_back({pos_in_block[h.tgt],
                                                           pos_in_block[h.src], h.sign});
        }
    for (auto& [j, by_i] : cx.diff)
        for (auto& [i, m] : by_i)
            std::sort(m.entries.begin(), m.entries.end(), [](const Triplet& a, const Triplet& b) {
                return a.col != b.col ? a.col < b.col : a.row < b.row;
            });
    return cx;
}

bool d_squared_check(const BigradedComplex& c) {
    for (const auto& [j, by_i] : c.diff) {
        for (const auto& [i, m1] : by_i) {
            auto it = by_i.find(i + 1);
            if (it == by_i.end()) continue;
            const SparseMat& m2 = it->second;
            if (m1.rows != m2.cols) return false;
            std::map<int, std::vector<std::pair<int, int>>> m1_by_col;  // col -> (row, val)
            for (const Triplet& t : m1.entries) m1_by_col[t.col].push_back({t.row, t.val});
            std::map<int, std::vector<std::pair<int, int>>> m2_by_col;
            for (const Triplet& t : m2.entries) m2_by_col[t.col].push_back({t.row, t.val});
            for (const auto& [col, column] : m1_by_col) {
                std::map<int, long long> acc;
                for (const auto& [mid_row, v1] : column) {
                    auto mid = m2_by_col.find(mid_row);
                    if (mid == m2_by_col.end()) continue;
                    for (const auto& [row, v2] : mid->second)
                        acc[row] += static_cast<long long>(v1) * v2;
                }
                for (const auto& [_, sum] : acc)
                    if (sum != 0) return false;
            }
        }
    }
    return true;
}

}  // namespace khoflow
