#include "khoflow/pd.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "khoflow/errors.hpp"

namespace khoflow {

namespace {

struct Occ {
    int crossing;
    int slot;
    friend bool operator<(const Occ& a, const Occ& b) {
        return a.crossing != b.crossing ? a.crossing < b.crossing : a.slot < b.slot;
    }
};

bool is_under_slot(int s) { return s == 0 || s == 2; }

// Arrival status of an under slot: the under-strand comes in at slot 0.
bool under_is_arrival(int s) { return s == 0; }

struct ParsedTerms {
    std::vector<Crossing> crossings;
    int unknots = 0;
    std::vector<int> reversals;  // R(k) arguments, in textual order
};

int parse_strand_id(const std::string& tok, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected a strand id in '" + tok + "'");
    if (pos - start > 9) throw SyntaxError("strand id too large in '" + tok + "'");
    int v = std::stoi(tok.substr(start, pos - start));
    if (v < 1) throw SyntaxError("strand ids are positive; got '" + tok + "'");
    return v;
}

void expect_char(const std::string& tok, std::size_t& pos, char c) {
    if (pos >= tok.size() || tok[pos] != c)
        throw SyntaxError(std::string("expected '") + c + "' in '" + tok + "'");
    ++pos;
}

ParsedTerms parse_terms(const std::string& text) {
    ParsedTerms out;
    std::istringstream lines(text);
    std::string line;
    std::vector<std::string> tokens;
    while (std::getline(lines, line)) {
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] == '%') continue;  // comment line
        std::istringstream words(line);
        std::string tok;
        while (words >> tok) tokens.push_back(tok);
    }
    for (const std::string& tok : tokens) {
        if (tok == "U") {
            ++out.unknots;
            continue;
        }
        std::size_t pos = 1;
        if (tok[0] == 'X') {
            expect_char(tok, pos, '(');
            Crossing c;
            for (int k = 0; k < 4; ++k) {
                c.incident[static_cast<std::size_t>(k)] = parse_strand_id(tok, pos);
                expect_char(tok, pos, k < 3 ? ',' : ')');
            }
            if (pos != tok.size()) throw SyntaxError("trailing characters in '" + tok + "'");
            out.crossings.push_back(c);
        } else if (tok[0] == 'R') {
            expect_char(tok, pos, '(');
            out.reversals.push_back(parse_strand_id(tok, pos));
            expect_char(tok, pos, ')');
            if (pos != tok.size()) throw SyntaxError("trailing characters in '" + tok + "'");
        } else {
            throw SyntaxError("unrecognized term '" + tok + "'");
        }
    }
    return out;
}

// Occurrence table: strand id -> its (at most two) slots in the diagram.
std::map<int, std::vector<Occ>> occurrences(const std::vector<Crossing>& crossings) {
    std::map<int, std::vector<Occ>> occ;
    for (std::size_t t = 0; t < crossings.size(); ++t)
        for (int s = 0; s < 4; ++s)
            occ[crossings[t].incident[static_cast<std::size_t>(s)]].push_back(
                {static_cast<int>(t), s});
    return occ;
}

// Orientation solver. One boolean per crossing: does the over-strand arrive
// at slot 1? Under slots have fixed arrival status; each strand arc must
// have exactly one arrival and one departure between its two occurrences.
struct OrientationResult {
    std::vector<int> over_in_slot;
    // Strand components that never pass under, keyed by their minimal id.
    std::set<int> ambiguous_components;
};

OrientationResult propagate_orientation(const std::vector<Crossing>& crossings,
                                        const std::map<int, std::vector<Occ>>& occ,
                                        const std::vector<int>& reversals) {
    const int n = static_cast<int>(crossings.size());
    // over_in_b[t]: -1 unknown, 1 over arrives at slot 1, 0 at slot 3.
    std::vector<int> over_in_b(static_cast<std::size_t>(n), -1);

    // status of an occurrence given a tentative assignment; arrival = true.
    auto over_status = [&](const Occ& o, int val) {
        return o.slot == 1 ? val == 1 : val == 0;
    };

    // Link components: union strand ids joined by a shared passage.
    std::map<int, int> comp;
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& [id, _] : occ) comp[id] = id;
    auto unite = [&](int a, int b) { comp[find(a)] = find(b); };
    for (const Crossing& c : crossings) {
        unite(c.incident[0], c.incident[2]);
        unite(c.incident[1], c.incident[3]);
    }

    // Seed: arcs with at least one under-slot occurrence force the over
    // passages they touch; propagate across over-over arcs until stable.
    // Constraints are per-arc: its two occurrences get opposite statuses.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [id, sites] : occ) {
            const Occ& o1 = sites[0];
            const Occ& o2 = sites[1];
            auto known = [&](const Occ& o) -> std::optional<bool> {
                if (is_under_slot(o.slot)) return under_is_arrival(o.slot);
                int v = over_in_b[static_cast<std::size_t>(o.crossing)];
                if (v < 0) return std::nullopt;
                return over_status(o, v);
            };
            auto st1 = known(o1);
            auto st2 = known(o2);
            if (st1 && st2) {
                if (*st1 == *st2)
                    throw TopologyError("inconsistent orientation propagation at strand " +
                                        std::to_string(id));
                continue;
            }
            auto force = [&](const Occ& o, bool arrival) {
                // o is an over slot with unknown crossing state.
                int want = (o.slot == 1) == arrival ? 1 : 0;
                over_in_b[static_cast<std::size_t>(o.crossing)] = want;
                changed = true;
            };
            if (st1 && !st2) force(o2, !*st1);
            else if (st2 && !st1) force(o1, !*st2);
        }
    }

    // Components still unresolved never pass under. Tie-break: the minimal
    // arc id of the component departs from its smallest occurrence; R(k)
    // terms flip the choice for the component containing k.
    std::set<int> flipped;
    for (int k : reversals) {
        if (!occ.count(k)) throw TopologyError("R(" + std::to_string(k) + "): unknown strand id");
        int root = find(k);
        if (flipped.count(root))
            throw TopologyError("R(" + std::to_string(k) + "): component already reversed");
        flipped.insert(root);
    }

    OrientationResult res;
    std::set<int> handled_roots;
    for (const auto& [id, sites] : occ) {
        int root = find(id);
        bool unresolved = !is_under_slot(sites[0].slot) &&
                          over_in_b[static_cast<std::size_t>(sites[0].crossing)] < 0;
        if (!unresolved) continue;
        if (handled_roots.count(root)) continue;
        handled_roots.insert(root);
        // Minimal id of this component and its smallest occurrence.
        int min_id = id;
        for (const auto& [jd, _] : occ)
            if (find(jd) == root) min_id = std::min(min_id, jd);
        res.ambiguous_components.insert(min_id);
        const Occ& first = *std::min_element(occ.at(min_id).begin(), occ.at(min_id).end());
        bool departs_at_first = !flipped.count(root);
        // Ground one occurrence, then rerun propagation for this component.
        over_in_b[static_cast<std::size_t>(first.crossing)] =
            (first.slot == 1) == !departs_at_first ? 1 : 0;
        bool again = true;
        while (again) {
            again = false;
            for (const auto& [jd, jsites] : occ) {
                if (find(jd) != root) continue;
                const Occ& o1 = jsites[0];
                const Occ& o2 = jsites[1];
                int v1 = over_in_b[static_cast<std::size_t>(o1.crossing)];
                int v2 = over_in_b[static_cast<std::size_t>(o2.crossing)];
                if (v1 >= 0 && v2 >= 0) {
                    if (over_status(o1, v1) == over_status(o2, v2))
                        throw TopologyError("inconsistent orientation propagation at strand " +
                                            std::to_string(jd));
                    continue;
                }
                if (v1 >= 0) {
                    bool arr = !over_status(o1, v1);
                    over_in_b[static_cast<std::size_t>(o2.crossing)] = (o2.slot == 1) == arr ? 1 : 0;
                    again = true;
                } else if (v2 >= 0) {
                    bool arr = !over_status(o2, v2);
                    over_in_b[static_cast<std::size_t>(o1.crossing)] = (o1.slot == 1) == arr ? 1 : 0;
                    again = true;
                }
            }
        }
    }

    // R(k) on a component whose orientation was pinned by under-passages.
    for (int k : reversals) {
        int root = find(k);
        bool ambiguous = false;
        for (int m : res.ambiguous_components)
            if (find(m) == root) ambiguous = true;
        if (!ambiguous)
            throw TopologyError("R(" + std::to_string(k) +
                                "): orientation is pinned by under-passages");
    }

    for (int t = 0; t < n; ++t) {
        if (over_in_b[static_cast<std::size_t>(t)] < 0)
            throw TopologyError("orientation propagation left crossing " + std::to_string(t) +
                                " unresolved");
        res.over_in_slot.push_back(over_in_b[static_cast<std::size_t>(t)] == 1 ? 1 : 3);
    }
    return res;
}

LinkDiagram build_diagram(const std::vector<Crossing>& crossings, int unknots,
                          const std::vector<int>& reversals) {
    auto occ = occurrences(crossings);
    for (const auto& [id, sites] : occ)
        if (sites.size() != 2)
            throw TopologyError("strand " + std::to_string(id) + " appears " +
                                std::to_string(sites.size()) + " times (expected 2)");

    LinkDiagram d;
    d.crossings = crossings;
    d.unknot_components = unknots;
    d.strand_count = static_cast<int>(occ.size());
    if (!crossings.empty()) {
        auto orient = propagate_orientation(crossings, occ, reversals);
        d.over_in_slot = orient.over_in_slot;
        for (int s : d.over_in_slot) {
            int sign = s == 1 ? 1 : -1;
            d.signs.push_back(sign);
            (sign > 0 ? d.n_plus : d.n_minus) += 1;
        }
    } else if (!reversals.empty()) {
        throw TopologyError("R(k) with no crossings");
    }
    return d;
}

}  // namespace

std::uint64_t LinkDiagram::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (std::size_t t = 0; t < crossings.size(); ++t) {
        for (int s = 0; s < 4; ++s)
            mix(static_cast<std::uint64_t>(crossings[t].incident[static_cast<std::size_t>(s)]));
        mix(static_cast<std::uint64_t>(over_in_slot[t]));
    }
    mix(static_cast<std::uint64_t>(unknot_components));
    return h;
}

LinkDiagram parse_pd(const std::string& text) {
    ParsedTerms terms = parse_terms(text);
    return build_diagram(terms.crossings, terms.unknots, terms.reversals);
}

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram m;
    m.unknot_components = d.unknot_components;
    m.strand_count = d.strand_count;
    for (std::size_t t = 0; t < d.crossings.size(); ++t) {
        const auto& in = d.crossings[t].incident;
        Crossing c;
        if (d.over_in_slot[t] == 1) {
            // New under-in is the old over-arrival at slot 1; the old
            // under-strand becomes the over-strand and arrives at slot 3.
            c.incident = {in[1], in[2], in[3], in[0]};
            m.over_in_slot.push_back(3);
            m.signs.push_back(-1);
        } else {
            c.incident = {in[3], in[0], in[1], in[2]};
            m.over_in_slot.push_back(1);
            m.signs.push_back(1);
        }
        m.crossings.push_back(c);
    }
    m.n_plus = d.n_minus;
    m.n_minus = d.n_plus;
    return m;
}

std::string serialize_pd(const LinkDiagram& d) {
    // Re-derive the default orientation to decide which R(k) terms are
    // needed to reproduce the stored one.
    std::vector<int> needed;
    if (!d.crossings.empty()) {
        auto occ = occurrences(d.crossings);
        auto def = propagate_orientation(d.crossings, occ, {});
        for (int m : def.ambiguous_components) {
            // Compare the stored choice on the crossing holding m's first occurrence.
            const Occ& first = *std::min_element(occ.at(m).begin(), occ.at(m).end());
            if (d.over_in_slot[static_cast<std::size_t>(first.crossing)] !=
                def.over_in_slot[static_cast<std::size_t>(first.crossing)])
                needed.push_back(m);
        }
    }
    std::ostringstream out;
    bool sep = false;
    for (const Crossing& c : d.crossings) {
        if (sep) out << ' ';
        out << "X(" << c.incident[0] << ',' << c.incident[1] << ',' << c.incident[2] << ','
            << c.incident[3] << ')';
        sep = true;
    }
    for (int k : needed) {
        if (sep) out << ' ';
        out << "R(" << k << ')';
        sep = true;
    }
    for (int i = 0; i < d.unknot_components; ++i) {
        if (sep) out << ' ';
        out << 'U';
        sep = true;
    }
    return out.str();
}

LinkDiagram permute_crossings(const LinkDiagram& d, const std::vector<int>& perm) {
    const std::size_t n = d.crossings.size();
    if (perm.size() != n) throw DimensionError("permutation length mismatch");
    std::vector<bool> seen(n, false);
    LinkDiagram p;
    p.unknot_components = d.unknot_components;
    p.strand_count = d.strand_count;
    p.n_plus = d.n_plus;
    p.n_minus = d.n_minus;
    for (int old : perm) {
        if (old < 0 || static_cast<std::size_t>(old) >= n || seen[static_cast<std::size_t>(old)])
            throw DimensionError("not a permutation of the crossing set");
        seen[static_cast<std::size_t>(old)] = true;
        p.crossings.push_back(d.crossings[static_cast<std::size_t>(old)]);
        p.signs.push_back(d.signs[static_cast<std::size_t>(old)]);
        p.over_in_slot.push_back(d.over_in_slot[static_cast<std::size_t>(old)]);
    }
    return p;
}

}  // namespace khoflow
