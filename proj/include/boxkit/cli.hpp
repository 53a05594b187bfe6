#ifndef BOXKIT_CLI_HPP
#define BOXKIT_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "boxkit/boxicity_oracle.hpp"
#include "boxkit/circulant.hpp"
#include "boxkit/coloring.hpp"
#include "boxkit/errors.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/io.hpp"
#include "boxkit/realization.hpp"
#include "boxkit/recognition.hpp"
#include "boxkit/split_witness.hpp"

namespace boxkit {
namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

inline int resolve_oracle_guard(bool given, int cli_value) {
    if (given) return cli_value;
    if (const char* env = std::getenv("BOXKIT_GUARD")) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(env, &pos);
            if (pos != std::string(env).size() || v < 0) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("BOXKIT_GUARD must be a nonnegative integer (got \"" +
                                        std::string(env) + "\")");
        }
    }
    return 20;
}

inline std::string emit_graph_as(const Graph& g, const std::string& format) {
    if (format == "json") return emit_graph_json(g);
    if (format == "edgelist") return emit_graph_edgelist(g);
    if (format == "dot") return emit_graph_dot(g);
    throw std::invalid_argument("unknown graph output format: " + format);
}

// Shared witness-source options for the witness / family / boxes commands.
struct WitnessSource {
    std::vector<int> thm41;          // N B: circulant of order N*B with span parameter B
    std::vector<int> thm42;          // N B R: circulant of order N*B+R
    std::string auto_graph_file;     // derive via optimal coloring + chain arrangement
    std::string witness_file;        // stored witness JSON ...
    std::string graph_file;          // ... validated against this graph
};

inline void add_witness_source_options(CLI::App* sub, WitnessSource& src) {
    sub->add_option("--thm41", src.thm41,
                    "divisible-order circulant witness; args: N B (graph G_{N*B,B})")
        ->expected(2);
    sub->add_option("--thm42", src.thm42,
                    "remainder-order circulant witness; args: N B R (graph G_{N*B+R,B})")
        ->expected(3);
    sub->add_option("--cor33", src.auto_graph_file,
                    "derive a witness for the given graph file from an optimal coloring by "
                    "arranging each class's neighborhoods into two inclusion chains");
    sub->add_option("--from-file", src.witness_file, "load a stored witness JSON file");
    sub->add_option("--graph", src.graph_file, "graph file the stored witness refers to");
}

inline std::pair<Graph, WitnessFamily> resolve_witness(const WitnessSource& src, int guard) {
    int chosen = int(!src.thm41.empty()) + int(!src.thm42.empty()) +
                 int(!src.auto_graph_file.empty()) + int(!src.witness_file.empty());
    if (chosen != 1)
        throw std::invalid_argument(
            "choose exactly one witness source: --thm41, --thm42, --cor33, or --from-file");
    if (!src.thm41.empty()) {
        int n = src.thm41[0], b = src.thm41[1];
        Graph g = gen_circulant(n * b, b);
        return {std::move(g), witness_41(n, b)};
    }
    if (!src.thm42.empty()) {
        if (src.thm42.size() != 3)
            throw std::invalid_argument("--thm42 expects three arguments: N B R");
        int n = src.thm42[0], b = src.thm42[1], r = src.thm42[2];
        Graph g = gen_circulant(n * b + r, b);
        return {std::move(g), witness_42(n, b, r)};
    }
    if (!src.auto_graph_file.empty()) {
        Graph g = parse_graph(read_input(src.auto_graph_file));
        ChromaticResult chrom = chromatic_number(g, guard);
        std::optional<WitnessFamily> w = from_neighborhoods(g, chrom.witness);
        if (!w)
            throw VerifyError(
                "no witness: some color class admits no two-chain arrangement of its "
                "neighborhoods");
        return {std::move(g), std::move(*w)};
    }
    if (src.graph_file.empty())
        throw std::invalid_argument("--from-file requires --graph to supply the base graph");
    Graph g = parse_graph(read_input(src.graph_file));
    WitnessFamily w = parse_witness_json(read_input(src.witness_file));
    return {std::move(g), std::move(w)};
}

}  // namespace detail

// Full command-line surface. Returns the process exit code: 0 success,
// 1 verification failure (JSON report on stdout), 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"split-interval witnesses, box realizations, and exact boxicity oracles"};
    app.require_subcommand(0, 1);

    // ---- gen ----
    auto* gen_cmd = app.add_subcommand("gen", "generate a named graph and print it");
    std::string gen_kind;
    std::vector<int> gen_params;
    std::string gen_format = "json", gen_out;
    gen_cmd->add_option("kind", gen_kind, "circulant|crown|cycle|path|complete|multipartite")
        ->required()
        ->check(CLI::IsMember({"circulant", "crown", "cycle", "path", "complete", "multipartite"}));
    gen_cmd->add_option("params", gen_params, "integer parameters (circulant: A B; others: N...)");
    gen_cmd->add_option("--format", gen_format, "json|edgelist|dot")
        ->check(CLI::IsMember({"json", "edgelist", "dot"}));
    gen_cmd->add_option("--out", gen_out, "write to a file instead of stdout");

    // ---- recognize ----
    auto* rec_cmd = app.add_subcommand("recognize", "run structure recognizers on a graph");
    std::string rec_file, rec_out;
    bool rec_chordal = false, rec_split = false, rec_interval = false, rec_at = false;
    bool rec_all = false;
    rec_cmd->add_option("graph", rec_file, "graph file (json or edgelist; - for stdin)")
        ->required();
    rec_cmd->add_flag("--chordal", rec_chordal, "chordality + an elimination order");
    rec_cmd->add_flag("--split", rec_split, "split partition if one exists");
    rec_cmd->add_flag("--interval", rec_interval, "interval recognition");
    rec_cmd->add_flag("--at", rec_at, "asteroidal triple search with witness paths");
    rec_cmd->add_flag("--all", rec_all, "everything (default when no flag is given)");
    rec_cmd->add_option("--out", rec_out, "write to a file instead of stdout");

    // ---- color ----
    auto* col_cmd = app.add_subcommand("color", "color a graph");
    std::string col_file, col_out;
    bool col_greedy = false;
    std::vector<int> col_order;
    int col_guard = 20;
    col_cmd->add_option("graph", col_file, "graph file")->required();
    col_cmd->add_flag("--greedy", col_greedy, "first-fit instead of exact");
    col_cmd->add_option("--order", col_order, "vertex order for --greedy (comma separated)")
        ->delimiter(',');
    col_cmd->add_option("--guard", col_guard, "max vertex count for the exact solver (default 20)");
    col_cmd->add_option("--out", col_out, "write to a file instead of stdout");

    // ---- alpha ----
    auto* alpha_cmd = app.add_subcommand("alpha", "exact independence number");
    std::string alpha_file, alpha_out;
    int alpha_guard = 25;
    alpha_cmd->add_option("graph", alpha_file, "graph file")->required();
    alpha_cmd->add_option("--guard", alpha_guard, "max vertex count (default 25)");
    alpha_cmd->add_option("--out", alpha_out, "write to a file instead of stdout");

    // ---- witness ----
    auto* wit_cmd = app.add_subcommand("witness", "construct or validate a split-interval witness");
    detail::WitnessSource wit_src;
    std::string wit_out;
    int wit_guard = 20;
    detail::add_witness_source_options(wit_cmd, wit_src);
    wit_cmd->add_option("--guard", wit_guard, "coloring size guard for --cor33 (default 20)");
    wit_cmd->add_option("--out", wit_out, "write to a file instead of stdout");

    // ---- family ----
    auto* fam_cmd = app.add_subcommand(
        "family", "build the split interval graphs a witness induces and verify their intersection");
    detail::WitnessSource fam_src;
    std::string fam_out;
    int fam_guard = 20;
    detail::add_witness_source_options(fam_cmd, fam_src);
    fam_cmd->add_option("--guard", fam_guard, "coloring size guard for --cor33 (default 20)");
    fam_cmd->add_option("--out", fam_out, "write to a file instead of stdout");

    // ---- realize ----
    auto* real_cmd = app.add_subcommand("realize", "compute an interval realization of a graph");
    std::string real_file, real_out;
    real_cmd->add_option("graph", real_file, "graph file")->required();
    real_cmd->add_option("--out", real_out, "write to a file instead of stdout");

    // ---- boxes ----
    auto* box_cmd = app.add_subcommand(
        "boxes", "full pipeline: witness -> member graphs -> interval realizations -> boxes");
    detail::WitnessSource box_src;
    std::string box_out, box_format = "json";
    int box_guard = 20;
    detail::add_witness_source_options(box_cmd, box_src);
    box_cmd->add_option("--guard", box_guard, "coloring size guard for --cor33 (default 20)");
    box_cmd->add_option("--format", box_format, "json|svg (svg needs k in {1,2})")
        ->check(CLI::IsMember({"json", "svg"}));
    box_cmd->add_option("--out", box_out, "write to a file instead of stdout");

    // ---- boxicity ----
    auto* boxy_cmd = app.add_subcommand("boxicity", "exact boxicity via interval completions");
    std::string boxy_file, boxy_out;
    int boxy_kmax = -1, boxy_guard = 20;
    boxy_cmd->add_option("graph", boxy_file, "graph file")->required();
    boxy_cmd->add_option("--kmax", boxy_kmax, "error out if the boxicity exceeds this bound");
    auto* boxy_guard_opt = boxy_cmd->add_option(
        "--guard", boxy_guard, "max non-edge count (default: BOXKIT_GUARD env or 20)");
    boxy_cmd->add_option("--out", boxy_out, "write to a file instead of stdout");

    // ---- crown-search ----
    auto* crown_cmd = app.add_subcommand(
        "crown-search", "search for two interval completions of a crown graph covering its non-edges");
    int crown_n = 0, crown_jobs = 1;
    long long crown_trials = 100000;
    std::uint64_t crown_seed = 1;
    bool crown_exhaustive = false;
    std::string crown_out;
    crown_cmd->add_option("--n", crown_n, "crown side size")->required();
    crown_cmd->add_option("--trials", crown_trials, "randomized trial count (default 100000)");
    crown_cmd->add_option("--seed", crown_seed, "base seed (default 1)");
    crown_cmd->add_option("--jobs", crown_jobs, "worker threads (default 1)");
    crown_cmd->add_flag("--exhaustive", crown_exhaustive,
                        "prove the answer by enumerating all completions (side <= 5)");
    crown_cmd->add_option("--out", crown_out, "write to a file instead of stdout");

    // ---- explore ----
    auto* exp_cmd = app.add_subcommand(
        "explore", "sweep circulant parameters and report which admit verified witness families");
    int exp_amax = 12, exp_bmax = 0, exp_guard = 20;
    std::string exp_out;
    exp_cmd->add_option("--amax", exp_amax, "largest circulant order to try (default 12)");
    exp_cmd->add_option("--bmax", exp_bmax, "largest span parameter (default: amax/2)");
    exp_cmd->add_option("--guard", exp_guard, "coloring size guard for the fallback route");
    exp_cmd->add_option("--out", exp_out, "write to a file instead of stdout");

    // ---- convert ----
    auto* conv_cmd = app.add_subcommand("convert", "re-emit a graph in another format");
    std::string conv_file, conv_to = "json", conv_out;
    conv_cmd->add_option("graph", conv_file, "graph file")->required();
    conv_cmd->add_option("--to", conv_to, "json|edgelist|dot")
        ->check(CLI::IsMember({"json", "edgelist", "dot"}));
    conv_cmd->add_option("--out", conv_out, "write to a file instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("boxkit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    if (app.get_subcommands().empty()) {
        out << app.help();
        return 0;
    }

    try {
        if (gen_cmd->parsed()) {
            Graph g = [&]() {
                if (gen_kind == "circulant") {
                    if (gen_params.size() != 2)
                        throw std::invalid_argument("circulant expects two parameters: A B");
                    return gen_circulant(gen_params[0], gen_params[1]);
                }
                std::string kind = gen_kind == "multipartite" ? "complete_multipartite" : gen_kind;
                if (kind != "complete_multipartite" && gen_params.size() != 1)
                    throw std::invalid_argument(gen_kind + " expects one parameter: N");
                return generate(kind, gen_params);
            }();
            detail::deliver(detail::emit_graph_as(g, gen_format), gen_out, out);
            return 0;
        }

        if (rec_cmd->parsed()) {
            Graph g = parse_graph(detail::read_input(rec_file));
            bool all = rec_all || !(rec_chordal || rec_split || rec_interval || rec_at);
            nlohmann::ordered_json doc;
            doc["n"] = g.vertex_count();
            if (all || rec_chordal) {
                auto peo = perfect_elimination_ordering(g);
                doc["chordal"] = peo.has_value();
                doc["elimination_order"] =
                    peo ? nlohmann::ordered_json(*peo) : nlohmann::ordered_json(nullptr);
            }
            if (all || rec_split) {
                auto sp = is_split(g);
                doc["split"] = sp.has_value();
                if (sp) {
                    doc["independent_side"] = sp->independent_set;
                    doc["clique_side"] = sp->clique;
                }
            }
            if (all || rec_interval) doc["interval"] = is_interval(g);
            if (all || rec_at) {
                auto triples = asteroidal_triples(g, false);
                doc["asteroidal_triple_free"] = triples.empty();
                doc["asteroidal_triples"] = nlohmann::ordered_json::array();
                for (const auto& t : triples) {
                    nlohmann::ordered_json entry;
                    entry["u"] = t.u;
                    entry["v"] = t.v;
                    entry["w"] = t.w;
                    entry["path_uv"] = t.path_uv;
                    entry["path_vw"] = t.path_vw;
                    entry["path_wu"] = t.path_wu;
                    doc["asteroidal_triples"].push_back(std::move(entry));
                }
            }
            detail::deliver(doc.dump(2) + "\n", rec_out, out);
            return 0;
        }

        if (col_cmd->parsed()) {
            Graph g = parse_graph(detail::read_input(col_file));
            nlohmann::ordered_json doc;
            if (col_greedy) {
                ColorClasses cc = col_order.empty() ? greedy_coloring(g)
                                                    : greedy_coloring(g, col_order);
                doc["colors"] = cc.color_count();
                doc["classes"] = cc.classes;
            } else {
                if (!col_order.empty())
                    throw std::invalid_argument("--order applies only with --greedy");
                ChromaticResult res = chromatic_number(g, col_guard);
                doc["chromatic_number"] = res.value;
                doc["classes"] = res.witness.classes;
            }
            detail::deliver(doc.dump(2) + "\n", col_out, out);
            return 0;
        }

        if (alpha_cmd->parsed()) {
            Graph g = parse_graph(detail::read_input(alpha_file));
            nlohmann::ordered_json doc;
            doc["independence_number"] = independence_number(g, alpha_guard);
            detail::deliver(doc.dump(2) + "\n", alpha_out, out);
            return 0;
        }

        if (wit_cmd->parsed()) {
            auto [g, w] = detail::resolve_witness(wit_src, wit_guard);
            WitnessReport rep = validate_witness(g, w);
            nlohmann::ordered_json doc;
            doc["graph"] = graph_to_json(g);
            doc["witness"] = witness_to_json(w);
            doc["report"] = witness_report_to_json(rep);
            detail::deliver(doc.dump(2) + "\n", wit_out, out);
            return rep.ok() ? 0 : 1;
        }

        if (fam_cmd->parsed()) {
            auto [g, w] = detail::resolve_witness(fam_src, fam_guard);
            WitnessReport rep = validate_witness(g, w);
            if (!rep.ok()) {
                detail::deliver(witness_report_to_json(rep).dump(2) + "\n", fam_out, out);
                return 1;
            }
            SplitIntervalFamily fam = build_family(g, w);
            nlohmann::ordered_json doc;
            doc["graph"] = graph_to_json(g);
            doc["family"] = family_to_json(fam);
            detail::deliver(doc.dump(2) + "\n", fam_out, out);
            return 0;
        }

        if (real_cmd->parsed()) {
            Graph g = parse_graph(detail::read_input(real_file));
            auto r = realize_interval(g);
            if (!r)
                throw VerifyError("realization does not exist: the graph is not an interval graph");
            detail::deliver(emit_realization_json(*r), real_out, out);
            return 0;
        }

        if (box_cmd->parsed()) {
            auto [g, w] = detail::resolve_witness(box_src, box_guard);
            WitnessReport rep = validate_witness(g, w);
            if (!rep.ok()) {
                detail::deliver(witness_report_to_json(rep).dump(2) + "\n", box_out, out);
                return 1;
            }
            SplitIntervalFamily fam = build_family(g, w);
            std::vector<IntervalRealization> reals;
            for (std::size_t i = 0; i < fam.members.size(); ++i)
                reals.push_back(realize_chain_split(fam.members[i].graph,
                                                    fam.members[i].partition,
                                                    w.coloring.classes[i], w.pivots[i]));
            BoxRepresentation rep_boxes = assemble_boxes(g, fam, reals);
            if (!verify_boxes(g, rep_boxes))
                throw std::logic_error("assembled boxes failed re-verification");
            detail::deliver(box_format == "svg" ? emit_boxes_svg(rep_boxes)
                                                : emit_boxes_json(rep_boxes),
                            box_out, out);
            return 0;
        }

        if (boxy_cmd->parsed()) {
            Graph g = parse_graph(detail::read_input(boxy_file));
            int guard = detail::resolve_oracle_guard(boxy_guard_opt->count() > 0, boxy_guard);
            CompletionCatalog cat = interval_completions(g, guard);
            int k = cover_minimum(cat, boxy_kmax);
            nlohmann::ordered_json doc;
            doc["n"] = g.vertex_count();
            doc["non_edges"] = cat.non_edges.size();
            doc["catalog_entries"] = cat.excluded_masks.size();
            doc["boxicity"] = k;
            detail::deliver(doc.dump(2) + "\n", boxy_out, out);
            return 0;
        }

        if (crown_cmd->parsed()) {
            CrownSearchReport rep = crown_exhaustive
                                        ? crown_search_exhaustive(crown_n, crown_jobs)
                                        : crown_search(crown_n, crown_trials, crown_seed,
                                                       crown_jobs);
            detail::deliver(crown_report_to_json(rep).dump(2) + "\n", crown_out, out);
            return 0;
        }

        if (exp_cmd->parsed()) {
            if (exp_bmax <= 0) exp_bmax = exp_amax / 2;
            nlohmann::ordered_json doc;
            doc["amax"] = exp_amax;
            doc["bmax"] = exp_bmax;
            doc["entries"] = nlohmann::ordered_json::array();
            for (int b = 1; b <= exp_bmax; ++b) {
                for (int a = 2 * b; a <= exp_amax; ++a) {
                    int n = a / b, r = a % b;
                    nlohmann::ordered_json entry;
                    entry["a"] = a;
                    entry["b"] = b;
                    Graph g = gen_circulant(a, b);
                    std::string route;
                    std::optional<WitnessFamily> w;
                    std::string reason;
                    try {
                        if (r == 0) {
                            route = "divisible";
                            w = witness_41(n, b);
                        } else if (n >= b - r - 1) {
                            route = "remainder";
                            w = witness_42(n, b, r);
                        } else {
                            route = "auto";
                            if (a > exp_guard) {
                                reason = "skipped: order exceeds the coloring guard";
                            } else {
                                ChromaticResult chrom = chromatic_number(g, exp_guard);
                                w = from_neighborhoods(g, chrom.witness);
                                if (!w) reason = "no two-chain arrangement for some color class";
                            }
                        }
                        if (w) {
                            WitnessReport rep = validate_witness(g, *w);
                            if (!rep.ok()) {
                                reason = "witness validation failed: " + rep.violations.at(0);
                                w.reset();
                            } else {
                                SplitIntervalFamily fam = build_family(g, *w);
                                entry["family_size"] = fam.members.size();
                            }
                        }
                    } catch (const VerifyError& e) {
                        reason = e.what();
                        w.reset();
                    }
                    entry["route"] = route;
                    entry["verified"] = w.has_value();
                    if (!reason.empty()) entry["reason"] = reason;
                    doc["entries"].push_back(std::move(entry));
                }
            }
            detail::deliver(doc.dump(2) + "\n", exp_out, out);
            return 0;
        }

        if (conv_cmd->parsed()) {
            Graph g = parse_graph(detail::read_input(conv_file));
            detail::deliver(detail::emit_graph_as(g, conv_to), conv_out, out);
            return 0;
        }
    } catch (const VerifyError& e) {
        nlohmann::ordered_json doc;
        doc["ok"] = false;
        doc["error"] = e.what();
        out << doc.dump(2) << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace boxkit

#endif
