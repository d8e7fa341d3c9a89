#ifndef COVERS_CLI_HPP
#define COVERS_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covers/core.hpp"
#include "covers/generators.hpp"
#include "covers/geometry.hpp"
#include "covers/graphs.hpp"
#include "covers/intervals.hpp"
#include "covers/io.hpp"
#include "covers/oracle.hpp"

namespace covers {
namespace cli {

// Exit codes: 0 success / feasible, 10 infeasible (or failed verification),
// 11 budget exceeded, 2 usage error, 3 invalid input.
constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 10;
constexpr int kExitBudget = 11;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

namespace detail {

using ojson = nlohmann::ordered_json;

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open input file \"" + path + "\"");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

inline void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file \"" + path + "\"");
    f << text;
}

inline ojson coloring_json(int k, const Coloring& c) {
    ojson doc;
    doc["k"] = k;
    doc["assignments"] = ojson::array();
    for (const auto& [si, color] : c.assignments) {
        ojson a;
        a["set"] = si.set_id;
        a["copy"] = si.copy;
        a["color"] = color;
        doc["assignments"].push_back(std::move(a));
    }
    return doc;
}

inline const char* status_name(SplitStatus s) {
    switch (s) {
    case SplitStatus::Feasible: return "feasible";
    case SplitStatus::Infeasible: return "infeasible";
    default: return "budget-exceeded";
    }
}

inline int emit_split_result(const SplitResult& r, int k, bool summary, std::ostream& out) {
    if (summary) {
        out << status_name(r.status);
        if (r.status == SplitStatus::Feasible)
            out << ": " << r.coloring.size() << " assignments";
        if (r.status == SplitStatus::Infeasible && r.witness) {
            out << ": " << r.witness->note;
            if (!r.witness->points.empty()) {
                out << " [";
                for (std::size_t i = 0; i < r.witness->points.size(); ++i)
                    out << (i ? " " : "") << r.witness->points[i];
                out << "]";
            }
        }
        out << "\n";
    } else {
        ojson doc;
        doc["status"] = status_name(r.status);
        doc["k"] = k;
        doc["nodes"] = r.nodes;
        if (r.status == SplitStatus::Feasible) doc["coloring"] = coloring_json(k, r.coloring);
        if (r.status == SplitStatus::Infeasible && r.witness) {
            ojson w;
            w["note"] = r.witness->note;
            w["points"] = r.witness->points;
            doc["witness"] = std::move(w);
        }
        out << doc.dump(2) << "\n";
    }
    switch (r.status) {
    case SplitStatus::Feasible: return kExitOk;
    case SplitStatus::Infeasible: return kExitInfeasible;
    default: return kExitBudget;
    }
}

} // namespace detail

/// Dispatch for the single-binary subcommand interface.  Machine documents
/// go to `out`; human diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    using namespace detail;

    CLI::App app{"cover decomposition toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::string format = "json";
    int jobs = 1;
    app.add_option("--format", format, "output format: json or summary")
        ->check(CLI::IsMember({"json", "summary"}));
    app.add_option("--jobs", jobs, "worker count; results are independent of it")
        ->check(CLI::PositiveNumber);

    // ----- generate -----------------------------------------------------
    auto* generate = app.add_subcommand("generate", "emit a cover instance document");
    generate->require_subcommand(1);

    int kn_n = 0;
    auto* gen_kn = generate->add_subcommand("kn", "complete graph K_n");
    gen_kn->add_option("--n", kn_n, "vertex count")->required();

    int dn_n = 0;
    auto* gen_dn = generate->add_subcommand("dn", "dumbbell graph D_n (n odd)");
    gen_dn->add_option("--n", dn_n, "regularity degree")->required();

    int tree_b = 0, tree_d = 0;
    auto* gen_tree = generate->add_subcommand("tree", "truncated tree cover");
    gen_tree->add_option("--b", tree_b, "max child label")->required();
    gen_tree->add_option("--d", tree_d, "depth")->required();

    int ind_m = 0, ind_t = 0;
    auto* gen_ind = generate->add_subcommand("indicator", "indicator cover");
    gen_ind->add_option("--m", ind_m, "coordinate count")->required();
    gen_ind->add_option("--t", ind_t, "minimum number of ones")->required();

    std::uint64_t rg_seed = 0;
    int rg_maxv = 10, rg_maxe = 20, rg_maxm = 3;
    auto* gen_rg = generate->add_subcommand("random-graph", "seeded random multigraph");
    gen_rg->add_option("--seed", rg_seed, "rng seed")->required();
    gen_rg->add_option("--max-vertices", rg_maxv, "vertex bound");
    gen_rg->add_option("--max-edges", rg_maxe, "edge-instance bound");
    gen_rg->add_option("--max-mult", rg_maxm, "pair multiplicity bound");

    std::uint64_t ri_seed = 0;
    int ri_maxn = 12, ri_maxk = 4;
    auto* gen_ri = generate->add_subcommand("random-interval", "seeded random k-fold interval cover");
    gen_ri->add_option("--seed", ri_seed, "rng seed")->required();
    gen_ri->add_option("--max-n", ri_maxn, "order size bound");
    gen_ri->add_option("--max-k", ri_maxk, "fold bound");

    // ----- split ---------------------------------------------------------
    auto* split = app.add_subcommand("split", "run a constructive splitting algorithm");
    split->require_subcommand(1);

    std::string g2_input = "-";
    auto* split_g2 = split->add_subcommand("graph2", "2-good edge coloring");
    split_g2->add_option("input", g2_input, "instance document (default stdin)");

    std::string iv_input = "-", iv_algo = "sweep", iv_order;
    int iv_k = 1;
    auto* split_iv = split->add_subcommand("interval", "k-good coloring of an interval cover");
    split_iv->add_option("--algo", iv_algo, "sweep or dnc")
        ->check(CLI::IsMember({"sweep", "dnc"}));
    split_iv->add_option("--k", iv_k, "fold target")->required();
    split_iv->add_option("--order", iv_order, "point order document (default: declared order)");
    split_iv->add_option("input", iv_input, "instance document (default stdin)");

    // ----- verify ----------------------------------------------------------
    std::string vf_input = "-", vf_coloring;
    std::vector<std::string> vf_points;
    int vf_k = 0;
    bool vf_maximal = false;
    auto* verify = app.add_subcommand("verify", "check a coloring for k-goodness");
    verify->add_option("--k", vf_k, "fold target");
    verify->add_flag("--maximal", vf_maximal, "check every threshold k <= fold(x) at once");
    verify->add_option("--coloring", vf_coloring, "coloring document")->required();
    verify->add_option("--points", vf_points, "restrict verification to these points");
    verify->add_option("input", vf_input, "instance document (default stdin)");

    // ----- oracle ----------------------------------------------------------
    std::string or_input = "-";
    std::vector<std::string> or_points;
    int or_k = 1;
    std::uint64_t or_budget = 10'000'000;
    auto* oracle_cmd = app.add_subcommand("oracle", "complete backtracking decision");
    oracle_cmd->add_option("--k", or_k, "fold target")->required();
    oracle_cmd->add_option("--points", or_points, "constrain only these points");
    oracle_cmd->add_option("--budget", or_budget, "decision-node budget");
    oracle_cmd->add_option("input", or_input, "instance document (default stdin)");

    // ----- certify ---------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "exhaustive indecomposability checks");
    certify->require_subcommand(1);

    std::string ct_input;
    int ct_b = 0, ct_d = 0;
    auto* cert_tree = certify->add_subcommand("tree", "adversary sweep over all 2-partitions");
    cert_tree->add_option("--b", ct_b, "max child label (generate instead of reading)");
    cert_tree->add_option("--d", ct_d, "depth");
    cert_tree->add_option("input", ct_input, "tree cover instance (default stdin)");

    std::string cp_input = "-";
    std::size_t cp_limit = oracle::kPartitionDefaultLimit;
    auto* cert_part = certify->add_subcommand("partitions", "enumerate all 2-partitions");
    cert_part->add_option("--limit", cp_limit, "max set-instances (hard cap 24)");
    cert_part->add_option("input", cp_input, "instance document (default stdin)");

    // ----- render ----------------------------------------------------------
    int rd_b = 0, rd_d = 0;
    std::string rd_out = "-";
    auto* render = app.add_subcommand("render", "geometry exports");
    render->require_subcommand(1);
    auto* render_rects = render->add_subcommand("rects", "rectangle realization as SVG");
    render_rects->add_option("--b", rd_b, "max child label")->required();
    render_rects->add_option("--d", rd_d, "depth")->required();
    render_rects->add_option("--out", rd_out, "output file (default stdout)");

    std::string dot_input = "-", dot_out = "-";
    auto* render_dot = render->add_subcommand("dot", "graph view in DOT format");
    render_dot->add_option("--out", dot_out, "output file (default stdout)");
    render_dot->add_option("input", dot_input, "instance document (default stdin)");

    // ----- peel ------------------------------------------------------------
    std::string pl_input = "-";
    auto* peel = app.add_subcommand("peel", "layered peel diagnostic");
    peel->add_option("input", pl_input, "instance document (default stdin)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const bool summary = (format == "summary");
        (void)jobs;  // sequential execution keeps results independent of it

        if (gen_kn->parsed())
            out << emit_instance(graphs::graph_to_instance(graphs::gen_complete(kn_n)));
        else if (gen_dn->parsed())
            out << emit_instance(graphs::graph_to_instance(graphs::gen_dumbbell_dn(dn_n)));
        else if (gen_tree->parsed())
            out << emit_instance(geometry::gen_tree_cover({tree_b, tree_d}));
        else if (gen_ind->parsed())
            out << emit_instance(geometry::gen_indicator_cover(ind_m, ind_t));
        else if (gen_rg->parsed())
            out << emit_instance(graphs::graph_to_instance(
                gen::random_multigraph(rg_seed, rg_maxv, rg_maxe, rg_maxm)));
        else if (gen_ri->parsed())
            out << emit_instance(intervals::interval_to_instance(
                gen::random_interval_cover(ri_seed, ri_maxn, ri_maxk)));
        else if (split_g2->parsed()) {
            auto inst = load_instance(read_input(g2_input, in));
            auto res = graphs::two_good_coloring(graphs::to_graph(inst));
            return emit_split_result(res, 2, summary, out);
        } else if (split_iv->parsed()) {
            auto inst = load_instance(read_input(iv_input, in));
            std::vector<PointId> order = inst.points;
            if (!iv_order.empty()) order = load_point_list(read_input(iv_order, in));
            auto lc = intervals::to_interval_cover(inst, order);
            auto res = (iv_algo == "sweep") ? intervals::sweep_split(lc, iv_k)
                                            : intervals::divide_and_conquer_split(lc, iv_k);
            return emit_split_result(res, iv_k, summary, out);
        } else if (verify->parsed()) {
            if (!vf_maximal && vf_k < 1) {
                err << "usage error: verify needs --k or --maximal\n";
                return kExitUsage;
            }
            auto inst = load_instance(read_input(vf_input, in));
            auto [k, coloring] = load_coloring(read_input(vf_coloring, in));
            if (!vf_maximal && vf_k != k)
                err << "note: --k " << vf_k << " overrides the document's k=" << k << "\n";
            std::vector<PointId> over = inst.points;
            if (!vf_points.empty()) over = vf_points;
            auto report = vf_maximal ? verify_coloring_maximal(inst, coloring, over)
                                     : verify_coloring(inst, coloring, vf_k, over);
            if (summary) {
                out << (report.ok ? "ok" : "not k-good") << "\n";
            } else {
                ojson doc;
                doc["ok"] = report.ok;
                doc["violations"] = ojson::array();
                for (const auto& v : report.violations) {
                    ojson jv;
                    jv["point"] = v.point;
                    jv["fold"] = v.fold;
                    jv["missing"] = v.missing;
                    doc["violations"].push_back(std::move(jv));
                }
                out << doc.dump(2) << "\n";
            }
            return report.ok ? kExitOk : kExitInfeasible;
        } else if (oracle_cmd->parsed()) {
            auto inst = load_instance(read_input(or_input, in));
            std::vector<PointId> over = inst.points;
            if (!or_points.empty()) over = or_points;
            auto res = oracle::exact_split(inst, or_k, over, or_budget);
            return emit_split_result(res, or_k, summary, out);
        } else if (cert_tree->parsed()) {
            CoverInstance inst;
            if (ct_b > 0 || ct_d > 0)
                inst = geometry::gen_tree_cover({ct_b, ct_d});
            else
                inst = load_instance(read_input(ct_input, in));
            auto params = geometry::tree_params_of(inst);
            const std::size_t nsets = inst.sets.size();
            if (nsets > oracle::kPartitionHardCap)
                throw DomainError("certify tree: too many sets for an exhaustive sweep");
            std::uint64_t total = std::uint64_t{1} << nsets;
            std::uint64_t witnessed = 0;
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                std::vector<int> part(nsets);
                for (std::size_t i = 0; i < nsets; ++i)
                    part[i] = static_cast<int>((mask >> i) & 1);
                auto w = geometry::adversary_walk(inst, part);
                // validate by raw membership
                bool valid = true;
                for (std::size_t i = 0; i < nsets && valid; ++i) {
                    if (part[i] != w.part) continue;
                    for (const auto& m : inst.sets[i].members)
                        if (m == w.missed_node) { valid = false; break; }
                }
                if (valid) ++witnessed;
            }
            if (summary) {
                out << witnessed << "/" << total << " partitions witnessed\n";
            } else {
                ojson doc;
                doc["b"] = params.b;
                doc["d"] = params.d;
                doc["partitions"] = total;
                doc["witnessed"] = witnessed;
                doc["all_valid"] = (witnessed == total);
                out << doc.dump(2) << "\n";
            }
            return witnessed == total ? kExitOk : kExitInfeasible;
        } else if (cert_part->parsed()) {
            auto inst = load_instance(read_input(cp_input, in));
            auto cert = oracle::enumerate_partitions_check(inst, cp_limit);
            if (summary) {
                out << cert.failure_count << "/" << cert.total_partitions
                    << " partitions fail; two-split-free: "
                    << (cert.is_two_split_free() ? "yes" : "no") << "\n";
            } else {
                ojson doc;
                doc["partitions"] = cert.total_partitions;
                doc["failures"] = cert.failure_count;
                doc["exhaustive"] = cert.exhaustive;
                doc["two_split_free"] = cert.is_two_split_free();
                out << doc.dump(2) << "\n";
            }
            return kExitOk;
        } else if (render_rects->parsed()) {
            auto scene = geometry::realize_rectangles({rd_b, rd_d});
            write_output(rd_out, out, geometry::export_svg(scene));
            return kExitOk;
        } else if (render_dot->parsed()) {
            auto inst = load_instance(read_input(dot_input, in));
            write_output(dot_out, out, graphs::to_dot(graphs::to_graph(inst)));
            return kExitOk;
        } else if (peel->parsed()) {
            auto inst = load_instance(read_input(pl_input, in));
            auto layering = intervals::layered_peel(inst);
            if (summary) {
                out << layering.layers.size() << " layers, " << layering.residual.size()
                    << " residual instances\n";
                return kExitOk;
            }
            ojson doc;
            doc["layers"] = ojson::array();
            for (const auto& layer : layering.layers) {
                ojson jl = ojson::array();
                for (const auto& si : layer) {
                    ojson js;
                    js["set"] = si.set_id;
                    js["copy"] = si.copy;
                    jl.push_back(std::move(js));
                }
                doc["layers"].push_back(std::move(jl));
            }
            doc["residual"] = ojson::array();
            for (const auto& si : layering.residual) {
                ojson js;
                js["set"] = si.set_id;
                js["copy"] = si.copy;
                doc["residual"].push_back(std::move(js));
            }
            out << doc.dump(2) << "\n";
            return kExitOk;
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

} // namespace cli
} // namespace covers

#endif // COVERS_CLI_HPP
