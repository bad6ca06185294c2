#include "khoflow/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "khoflow/complex.hpp"
#include "khoflow/errors.hpp"
#include "khoflow/flow_category.hpp"
#include "khoflow/homology.hpp"
#include "khoflow/json_io.hpp"
#include "khoflow/khovanov_flow.hpp"
#include "khoflow/laurent.hpp"
#include "khoflow/pd.hpp"

namespace khoflow {

namespace {

// Diagram source shared by the diagram-consuming subcommands: a positional
// planar-diagram string or a file holding one.
struct DiagramInput {
    std::string pd;
    std::string file;
    CLI::Option* pos = nullptr;

    void attach(CLI::App* sub) {
        pos = sub->add_option("pd", pd, "planar diagram code, e.g. \"X(1,4,2,5) ...\"");
        auto* f = sub->add_option("--file", file, "read the diagram code from a file");
        pos->excludes(f);
    }

    LinkDiagram load() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw SyntaxError("cannot open diagram file: " + file);
            std::ostringstream text;
            text << in.rdbuf();
            return parse_pd(text.str());
        }
        // An explicitly passed empty string is the empty link, so only a
        // truly absent argument is an error.
        if (pos == nullptr || pos->count() == 0)
            throw SyntaxError("no diagram given: pass a PD string or --file");
        return parse_pd(pd);
    }
};

std::string group_str(const HomologyEntry& h) {
    std::string s;
    if (h.free_rank == 1) s = "Z";
    else if (h.free_rank > 1) s = "Z^" + std::to_string(h.free_rank);
    for (const BigInt& t : h.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
}

std::string label_str(const std::map<int, Label>& labels) {
    std::string s;
    for (const auto& [_, lab] : labels) s += lab == Label::plus ? '+' : '-';
    return s;
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

int checked_pairs_gap(int n) { return n <= 6 ? n : 4; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Khovanov homology and combinatorial flow categories"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- homology ----------------------------------------------------------
    auto* homology_cmd = app.add_subcommand("homology", "integral homology table of a diagram");
    DiagramInput homology_in;
    homology_in.attach(homology_cmd);
    std::string homology_format = "table";
    int homology_cap = 16;
    int homology_threads = 1;
    homology_cmd->add_option("--format", homology_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    homology_cmd->add_option("--cap", homology_cap, "largest allowed crossing count");
    homology_cmd->add_option("--threads", homology_threads, "worker threads (output unchanged)");
    homology_cmd->callback([&] {
        LinkDiagram d = homology_in.load();
        BuildOptions opts;
        opts.cube_cap = homology_cap;
        opts.threads = homology_threads;
        HomologyTable table = homology(differential(d, opts));
        if (homology_format == "json") {
            emit_json(out, homology_to_json(table));
            return;
        }
        out << "i\tj\tgroup\n";
        for (const auto& [ij, h] : table.entries)
            out << ij.first << "\t" << ij.second << "\t" << group_str(h) << "\n";
    });

    // ---- jones -------------------------------------------------------------
    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial via the homology route");
    DiagramInput jones_in;
    jones_in.attach(jones_cmd);
    std::string jones_format = "table";
    int jones_cap = 16;
    int jones_threads = 1;
    bool jones_oracle = false;
    jones_cmd->add_option("--format", jones_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    jones_cmd->add_option("--cap", jones_cap, "largest allowed crossing count");
    jones_cmd->add_option("--threads", jones_threads, "worker threads (output unchanged)");
    jones_cmd->add_flag("--oracle", jones_oracle,
                        "cross-check against the independent state-sum route");
    jones_cmd->callback([&] {
        LinkDiagram d = jones_in.load();
        BuildOptions opts;
        opts.cube_cap = jones_cap;
        opts.threads = jones_threads;
        Laurent v = jones(d, opts);
        if (jones_oracle) {
            Laurent w = kauffman_jones(d, jones_cap);
            if (!(v == w)) {
                err << "route disagreement: homology route " << to_string(v)
                    << " vs state sum " << to_string(w) << "\n";
                rc = 3;
                return;
            }
        }
        if (jones_format == "json") emit_json(out, polynomial_to_json(v));
        else out << to_string(v) << "\n";
    });

    // ---- generators --------------------------------------------------------
    auto* gens_cmd = app.add_subcommand("generators", "labeled resolution generators with gradings");
    DiagramInput gens_in;
    gens_in.attach(gens_cmd);
    std::string gens_format = "table";
    int gens_cap = 16;
    int gens_threads = 1;
    gens_cmd->add_option("--format", gens_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    gens_cmd->add_option("--cap", gens_cap, "largest allowed crossing count");
    gens_cmd->add_option("--threads", gens_threads, "worker threads (output unchanged)");
    gens_cmd->callback([&] {
        LinkDiagram d = gens_in.load();
        BuildOptions opts;
        opts.cube_cap = gens_cap;
        opts.threads = gens_threads;
        auto gens = generators(d, opts);
        if (gens_format == "json") {
            emit_json(out, generators_to_json(gens));
            return;
        }
        out << "vertex\tlabels\tgr_h\tgr_q\n";
        for (const auto& g : gens)
            out << bitvec_str(g.gen.config.vertex) << "\t" << label_str(g.gen.labels)
                << "\t" << g.gr_h << "\t" << g.gr_q << "\n";
    });

    // ---- export-complex ----------------------------------------------------
    auto* export_cmd = app.add_subcommand("export-complex",
                                          "full differential as JSON (or the flow skeleton)");
    DiagramInput export_in;
    export_in.attach(export_cmd);
    std::string export_out_path;
    int export_cap = 16;
    int export_threads = 1;
    bool export_skeleton = false;
    export_cmd->add_option("--out", export_out_path, "write to this file instead of stdout");
    export_cmd->add_option("--cap", export_cap, "largest allowed crossing count");
    export_cmd->add_option("--threads", export_threads, "worker threads (output unchanged)");
    export_cmd->add_flag("--skeleton", export_skeleton,
                         "emit the flow-category skeleton instead of the complex");
    export_cmd->callback([&] {
        LinkDiagram d = export_in.load();
        BuildOptions opts;
        opts.cube_cap = export_cap;
        opts.threads = export_threads;
        BigradedComplex cx = differential(d, opts);
        Json doc = export_skeleton ? skeleton_to_json(skeleton_from_complex(cx))
                                   : complex_to_json(cx);
        if (export_out_path.empty()) {
            emit_json(out, doc);
            return;
        }
        std::ofstream f(export_out_path);
        if (!f) throw SyntaxError("cannot write file: " + export_out_path);
        f << doc.dump(2) << "\n";
        out << "wrote " << export_out_path << "\n";
    });

    // ---- cube --------------------------------------------------------------
    auto* cube_cmd = app.add_subcommand("cube", "face-axiom and acyclicity report for the n-cube");
    int cube_n = 0;
    int cube_cap = 10;
    std::string cube_format = "table";
    cube_cmd->add_option("n", cube_n, "cube dimension")->required();
    cube_cmd->add_option("--cap", cube_cap, "largest allowed dimension");
    cube_cmd->add_option("--format", cube_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cube_cmd->callback([&] {
        FlowCategorySkeleton fc = cube_flow_category(cube_n, cube_cap);
        const int top = static_cast<int>(fc.objects.size()) - 1;
        // Full sweep for small cubes; in higher dimension the deepest
        // intervals hold too many chains, so only bounded gaps are swept.
        const int max_gap = checked_pairs_gap(cube_n);
        int pairs_checked = 0;
        FaceReport top_report;
        bool top_checked = false;
        for (const auto& [a, b] : fc.relation) {
            if (fc.mu[static_cast<std::size_t>(a)] - fc.mu[static_cast<std::size_t>(b)] > max_gap)
                continue;
            FaceReport r = verify_face_axioms(build_face_poset(fc, a, b));
            if (!r.ok) throw AxiomViolation("face verification failed silently");
            ++pairs_checked;
            if (a == top && b == 0) {
                top_report = r;
                top_checked = true;
            }
        }
        const bool acyclic = chain_homology(floer_complex(fc)).empty();
        if (!acyclic)
            throw ComplexError("cube complex is not acyclic: sign convention broken");

        if (cube_format == "json") {
            Json doc = Json::object();
            doc["schema"] = "khoflow-cubereport-v1";
            doc["dimension"] = cube_n;
            doc["objects"] = fc.objects.size();
            doc["face_pairs_checked"] = pairs_checked;
            doc["max_gap_checked"] = max_gap;
            if (top_checked) {
                Json codim = Json::object();
                for (const auto& [c, k] : top_report.strata_per_codim)
                    codim[std::to_string(c)] = k;
                doc["top_strata_per_codim"] = std::move(codim);
                doc["top_maximal_chains"] = top_report.maximal_chains;
            } else {
                doc["top_strata_per_codim"] = nullptr;
                doc["top_maximal_chains"] = nullptr;
            }
            doc["acyclic"] = acyclic;
            emit_json(out, doc);
            return;
        }
        out << "cube dimension " << cube_n << "\n";
        out << "objects " << fc.objects.size() << "\n";
        out << "face axioms ok for " << pairs_checked << " pairs (grading gap <= "
            << max_gap << ")\n";
        if (top_checked) {
            out << "top interval strata by codimension:";
            for (const auto& [c, k] : top_report.strata_per_codim)
                out << " " << c << ":" << k;
            out << "\n";
            out << "top interval maximal chains " << top_report.maximal_chains << "\n";
        }
        out << "chain complex acyclic yes\n";
    });

    // ---- flowcheck ---------------------------------------------------------
    auto* flow_cmd = app.add_subcommand("flowcheck",
                                        "broken-flow balance report for a skeleton");
    std::string flow_file;
    std::string flow_pd;
    int flow_cube = 0;
    std::string flow_format = "table";
    int flow_cap = 16;
    int flow_threads = 1;
    auto* flow_pos = flow_cmd->add_option("skeleton", flow_file, "skeleton JSON file");
    auto* flow_pd_opt =
        flow_cmd->add_option("--pd", flow_pd, "derive the skeleton from this diagram");
    auto* flow_cube_opt =
        flow_cmd->add_option("--cube", flow_cube, "use the n-dimensional cube skeleton");
    flow_pos->excludes(flow_pd_opt)->excludes(flow_cube_opt);
    flow_pd_opt->excludes(flow_cube_opt);
    flow_cmd->add_option("--format", flow_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    flow_cmd->add_option("--cap", flow_cap, "largest allowed crossing count / dimension");
    flow_cmd->add_option("--threads", flow_threads, "worker threads (output unchanged)");
    flow_cmd->callback([&] {
        FlowCategorySkeleton fc;
        if (!flow_file.empty()) {
            std::ifstream in(flow_file);
            if (!in) throw SyntaxError("cannot open skeleton file: " + flow_file);
            Json doc;
            try {
                doc = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw SyntaxError(std::string("malformed skeleton JSON: ") + e.what());
            }
            fc = skeleton_from_json(doc);
        } else if (!flow_pd.empty()) {
            BuildOptions opts;
            opts.cube_cap = flow_cap;
            opts.threads = flow_threads;
            fc = skeleton_from_complex(differential(parse_pd(flow_pd), opts));
        } else if (flow_cube > 0) {
            fc = cube_flow_category(flow_cube, std::max(flow_cap, 10));
        } else {
            throw SyntaxError("no skeleton given: pass a file, --pd, or --cube");
        }
        BrokenFlowReport rep = d_squared_from_boundary(fc);
        if (flow_format == "json") {
            emit_json(out, broken_flow_to_json(rep, fc));
        } else {
            out << "gap-two pairs " << rep.pairs.size() << "\n";
            for (const BrokenPair& p : rep.pairs)
                if (p.signed_sum != 0)
                    out << "unbalanced " << p.above << " -> " << p.below
                        << " sum " << p.signed_sum << "\n";
            out << "balanced " << (rep.balanced ? "yes" : "no") << "\n";
        }
        if (!rep.balanced) rc = 3;
    });

    // ---- parse and dispatch ------------------------------------------------
    std::vector<std::string> argv_store;
    argv_store.push_back("khoflow");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? 0 : 1;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const ComplexError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const DivisibilityError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const AxiomViolation& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const SyntaxError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const TopologyError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const BitError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const IndexError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DiagramMismatch& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}

}  // namespace khoflow
