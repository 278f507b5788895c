#include "domfind/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "domfind/acyclic_dominators.hpp"
#include "domfind/gen.hpp"
#include "domfind/general_dominators.hpp"
#include "domfind/graph.hpp"
#include "domfind/loops.hpp"
#include "domfind/oracle.hpp"
#include "domfind/reduce.hpp"

namespace domfind::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
    std::string algo = "hd";
    std::string input = "-";
    std::string output = "-";
    std::string kind = "random";
    bool check = false;
    bool do_normalize = false;
    std::uint64_t seed = 1;
    int n = 2;
    long long m = 0;
    int depth = 1;
    std::string sizes = "100000,200000,400000,800000";
    std::string algos = "hd,gd";
    int runs = 5;
};

FlowGraph load_graph(const CliConfig& cfg, std::istream& stdin_stream, std::ostream& err) {
    FlowGraph g;
    if (cfg.input == "-") {
        g = parse_graph(stdin_stream);
    } else {
        std::ifstream file(cfg.input);
        if (!file) throw ParseError(0, "cannot open input file '" + cfg.input + "'");
        g = parse_graph(file);
    }
    if (cfg.do_normalize) {
        NormalizeResult norm = normalize(g);
        err << "normalized: " << g.n() << " -> " << norm.graph.n() << " vertices, " << g.m()
            << " -> " << norm.graph.m() << " arcs\n";
        g = std::move(norm.graph);
    }
    return g;
}

// Returns false (and reports) if the graph breaks flow-graph rules.
bool check_valid(const FlowGraph& g, std::ostream& err) {
    std::vector<Violation> violations = validate(g);
    for (const Violation& v : violations) err << "invalid input: " << v.to_string() << '\n';
    return violations.empty();
}

void write_tree(const DominatorTree& tree, std::ostream& out) {
    for (int v = 1; v <= tree.n; ++v)
        out << v << ' ' << tree.idom[static_cast<size_t>(v)] << '\n';
}

int with_output(const CliConfig& cfg, std::ostream& stdout_stream, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
    if (cfg.output == "-") return body(stdout_stream);
    std::ofstream file(cfg.output);
    if (!file) {
        err << "cannot open output file '" << cfg.output << "'\n";
        return kExitUsage;
    }
    return body(file);
}

int cmd_compute(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    FlowGraph g = load_graph(cfg, in, err);
    if (!check_valid(g, err)) return kExitFailure;

    DominatorTree tree;
    if (cfg.algo == "ad") {
        DfsInfo info = run_dfs(g);
        if (!check_acyclic(g, info)) {
            err << "input contains back arc; --algo ad handles acyclic graphs only\n";
            return kExitFailure;
        }
        tree = compute_ad(g, info);
    } else if (cfg.algo == "gd") {
        tree = compute_gd(g).tree;
    } else if (cfg.algo == "hd") {
        tree = compute_hd(g).tree;
    } else if (cfg.algo == "reduction") {
        tree = dominators_via_reduction(g);
    } else if (cfg.algo == "oracle") {
        tree = brute_idom(g);
    } else {
        err << "unknown algorithm '" << cfg.algo << "'\n";
        return kExitUsage;
    }

    if (cfg.check) {
        TreeComparison cmp = trees_equal(tree, brute_idom(g));
        if (!cmp.equal) {
            err << "check failed: trees differ at vertex " << cmp.first_difference << '\n';
            return kExitFailure;
        }
        err << "check passed: matches brute-force dominators\n";
    }
    return with_output(cfg, out, err, [&](std::ostream& os) {
        write_tree(tree, os);
        return kExitOk;
    });
}

int cmd_loops(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    FlowGraph g = load_graph(cfg, in, err);
    if (!check_valid(g, err)) return kExitFailure;

    DfsInfo info = run_dfs(g);
    LoopForest forest = build_loop_forest(g, info);
    LoopClassification cls = classify_loops(g, info, forest);

    return with_output(cfg, out, err, [&](std::ostream& os) {
        for (int v = 1; v <= g.n(); ++v)
            os << v << ' ' << forest.h[static_cast<size_t>(v)] << '\n';
        os << "heads:";
        for (int u : forest.heads()) os << ' ' << u;
        os << '\n';
        os << "irreducible:";
        for (int u : cls.irreducible_heads()) os << ' ' << u;
        os << '\n';
        for (int v = 1; v <= g.n(); ++v) {
            int a = forest.exit_arc[static_cast<size_t>(v)];
            if (a >= 0) os << "exit " << v << ' ' << g.arc(a).tail << ' ' << g.arc(a).head << '\n';
        }
        return kExitOk;
    });
}

int cmd_reduce(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    FlowGraph g = load_graph(cfg, in, err);
    if (!check_valid(g, err)) return kExitFailure;

    DfsInfo info = run_dfs(g);
    LoopForest forest = build_loop_forest(g, info);
    LoopClassification cls = classify_loops(g, info, forest);
    ReducedGraph reduced = reduce(g, info, forest, cls);

    return with_output(cfg, out, err, [&](std::ostream& os) {
        serialize_graph(reduced.graph, os);
        for (size_t i = 0; i < reduced.provenance.size(); ++i) {
            const ReducedArcInfo& p = reduced.provenance[i];
            if (p.provenance == ArcProvenance::Rule2) {
                os << "# rule2 u=" << p.loop_head << '\n';
            } else if (p.provenance == ArcProvenance::Rule3) {
                const Arc& e = g.arc(p.entry_arc);
                os << "# rule3 entry=" << e.tail << ',' << e.head << '\n';
            }
        }
        return kExitOk;
    });
}

int cmd_gen(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    GenSpec spec;
    if (!gen_kind_from_string(cfg.kind, spec.kind)) {
        err << "unknown kind '" << cfg.kind << "'\n";
        return kExitUsage;
    }
    spec.n = cfg.n;
    spec.m = cfg.m;
    spec.seed = cfg.seed;
    spec.depth = cfg.depth;
    FlowGraph g = generate(spec);

    return with_output(cfg, out, err, [&](std::ostream& os) {
        os << "# gen kind=" << to_string(spec.kind) << " n=" << spec.n << " m=" << spec.m
           << " seed=" << spec.seed << " depth=" << spec.depth << '\n';
        serialize_graph(g, os);
        return kExitOk;
    });
}

double median_ms(std::vector<double>& samples) {
    std::sort(samples.begin(), samples.end());
    size_t k = samples.size();
    return k % 2 ? samples[k / 2] : 0.5 * (samples[k / 2 - 1] + samples[k / 2]);
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<long long> sizes;
    {
        std::stringstream ss(cfg.sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                sizes.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                err << "bad --sizes entry '" << tok << "'\n";
                return kExitUsage;
            }
        }
    }
    std::vector<std::string> algos;
    {
        std::stringstream ss(cfg.algos);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) algos.push_back(tok);
        }
    }

    for (const std::string& algo : algos) {
        for (long long m : sizes) {
            int n = std::max<long long>(2, m / 4);
            GenSpec spec{GenKind::Random, n, m, cfg.seed, 1};
            FlowGraph g = generate(spec);

            std::vector<double> samples;
            DominatorTree tree;
            for (int r = 0; r < cfg.runs; ++r) {
                auto t0 = std::chrono::steady_clock::now();
                if (algo == "ad") {
                    DfsInfo info = run_dfs(g);
                    if (!check_acyclic(g, info)) {
                        err << "bench: random graphs are cyclic; ad not applicable\n";
                        return kExitUsage;
                    }
                    tree = compute_ad(g, info);
                } else if (algo == "gd") {
                    tree = compute_gd(g).tree;
                } else if (algo == "hd") {
                    tree = compute_hd(g).tree;
                } else if (algo == "reduction") {
                    tree = dominators_via_reduction(g);
                } else {
                    err << "unknown algorithm '" << algo << "'\n";
                    return kExitUsage;
                }
                auto t1 = std::chrono::steady_clock::now();
                samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            if (cfg.check) {
                TreeComparison cmp = trees_equal(tree, brute_idom(g));
                if (!cmp.equal) {
                    err << "bench check failed at m=" << m << " vertex " << cmp.first_difference
                        << '\n';
                    return kExitFailure;
                }
            }
            double med = median_ms(samples);
            out << "algo=" << algo << " n=" << n << " m=" << m << " median_ms=" << med
                << " us_per_arc=" << (med * 1000.0 / static_cast<double>(m)) << '\n';
        }
    }
    return kExitOk;
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
    long long graphs = 0;
    for (int n = 2; n <= 4; ++n) {
        for (const FlowGraph& g : enumerate_small(n)) {
            DominatorTree expected = brute_idom(g);
            DominatorTree gd = compute_gd(g).tree;
            DominatorTree hd = compute_hd(g).tree;
            DominatorTree red = dominators_via_reduction(g);
            for (const DominatorTree* t : {&gd, &hd, &red}) {
                TreeComparison cmp = trees_equal(*t, expected);
                if (!cmp.equal) {
                    err << "selftest failed on an n=" << n << " graph at vertex "
                        << cmp.first_difference << '\n';
                    serialize_graph(g, err);
                    return kExitFailure;
                }
            }
            DfsInfo info = run_dfs(g);
            if (check_acyclic(g, info)) {
                TreeComparison cmp = trees_equal(compute_ad(g, info), expected);
                if (!cmp.equal) {
                    err << "selftest failed (acyclic) on an n=" << n << " graph\n";
                    serialize_graph(g, err);
                    return kExitFailure;
                }
            }
            ++graphs;
        }
    }
    out << "selftest passed on " << graphs << " graphs\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"dominator trees and loop nesting forests of flow graphs"};
    app.require_subcommand(1);
    CliConfig cfg;

    CLI::App* compute = app.add_subcommand("compute", "compute the dominator tree");
    compute->add_option("--algo", cfg.algo, "ad | gd | hd | oracle | reduction")
        ->check(CLI::IsMember({"ad", "gd", "hd", "oracle", "reduction"}));
    compute->add_option("--input", cfg.input, "graph file, '-' for stdin");
    compute->add_option("--output", cfg.output, "output file, '-' for stdout");
    compute->add_flag("--check", cfg.check, "verify against brute-force dominators");
    compute->add_flag("--normalize", cfg.do_normalize, "normalize the input first");

    CLI::App* loops = app.add_subcommand("loops", "compute the loop nesting forest");
    loops->add_option("--input", cfg.input);
    loops->add_option("--output", cfg.output);
    loops->add_flag("--normalize", cfg.do_normalize);

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "emit the acyclic reduction");
    reduce_cmd->add_option("--input", cfg.input);
    reduce_cmd->add_option("--output", cfg.output);
    reduce_cmd->add_flag("--normalize", cfg.do_normalize);

    CLI::App* gen = app.add_subcommand("gen", "generate a graph family member");
    gen->add_option("--kind", cfg.kind, "random | dag | nested_loops | ladder | complete_dag");
    gen->add_option("--n", cfg.n, "vertex count")->required();
    gen->add_option("--m", cfg.m, "arc count (0 = smallest/derived)");
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--depth", cfg.depth, "nesting depth (nested_loops)");
    gen->add_option("--output", cfg.output);

    CLI::App* bench = app.add_subcommand("bench", "time algorithms on random graphs");
    bench->add_option("--sizes", cfg.sizes, "comma-separated arc counts");
    bench->add_option("--algos", cfg.algos, "comma-separated algorithms");
    bench->add_option("--seed", cfg.seed);
    bench->add_option("--runs", cfg.runs, "samples per point (median reported)");
    bench->add_flag("--check", cfg.check, "verify each result against the oracle");

    CLI::App* selftest = app.add_subcommand("selftest", "exhaustive small-graph oracle sweep");
    (void)selftest;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(cfg, in, out, err);
        if (loops->parsed()) return cmd_loops(cfg, in, out, err);
        if (reduce_cmd->parsed()) return cmd_reduce(cfg, in, out, err);
        if (gen->parsed()) return cmd_gen(cfg, out, err);
        if (bench->parsed()) return cmd_bench(cfg, out, err);
        if (selftest->parsed()) return cmd_selftest(out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace domfind::cli
