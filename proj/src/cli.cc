#include <tropical/cli.hh>
#include <tropical/core.hh>
#include <tropical/errors.hh>
#include <tropical/formats.hh>
#include <tropical/gadgets.hh>
#include <tropical/poly.hh>
#include <tropical/solver.hh>
#include <tropical/verify.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>

using namespace tropical;

using std::function;
using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace
{
    // Parse errors carry the file they came from.
    template <typename F>
    auto load(const string & path, F parse)
    {
        auto text = read_file(path);
        try {
            return parse(text);
        }
        catch (const InputError & e) {
            throw InputError{path + ": " + e.what()};
        }
    }

    auto load_graph(const string & path) -> TropicalGraph
    {
        return load(path, [] (const string & t) { return parse_tropical_graph(t); });
    }

    auto plain(const TropicalGraph & g) -> Graph
    {
        return Graph{g.size(), g.edges()};
    }

    auto emit(const string & text, const string & path, ostream & out) -> void
    {
        if (path.empty())
            out << text;
        else
            write_file(path, text);
    }

    auto join(const vector<Vertex> & vs) -> string
    {
        string result;
        for (auto v : vs)
            result += " " + std::to_string(v);
        return result;
    }

    auto route_line(const StrategyReport & r) -> string
    {
        string line = "route:";
        for (auto s : r.route)
            line += " " + step_name(s);
        return line;
    }

    auto checked_palette(const string & name, bool experimental) -> Palette
    {
        auto p = parse_palette(name);
        if (p == Palette::Two && ! experimental)
            throw InputError{"palette two is experimental, pass --experimental to use it"};
        return p;
    }

    auto report_out(const Report & r, bool json, ostream & out) -> int
    {
        out << (json ? r.to_json() + "\n" : r.to_text());
        return r.passed() ? 0 : 1;
    }
}

auto tropical::run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
{
    CLI::App app{"Homomorphisms of vertex-coloured graphs", "tropical"};
    app.require_subcommand(1);
    function<int()> action;

    // solve
    string source, target, mode = "auto";
    bool witness = false, show_report = false;
    auto solve = app.add_subcommand("solve", "Decide whether a homomorphism exists");
    solve->add_option("--source", source, "Source graph (.tg)")->required();
    solve->add_option("--target", target, "Target graph (.tg)")->required();
    solve->add_option("--mode", mode, "auto, brute or poly")->check(CLI::IsMember({"auto", "brute", "poly"}));
    solve->add_flag("--witness", witness, "Print the homomorphism as map lines");
    solve->add_flag("--report", show_report, "Print the route and search statistics");
    solve->callback([&] {
        action = [&] {
            auto g = load_graph(source), h = load_graph(target);
            SolveOutcome outcome;
            optional<StrategyReport> route;
            if (mode == "brute")
                outcome = solve_trop_hom(g, h);
            else {
                DispatchOptions options;
                options.allow_fallback = mode == "auto";
                try {
                    std::tie(outcome, route) = dispatch_solve(g, h, options);
                }
                catch (const PreconditionError & e) {
                    throw InputError{string{"no polynomial route for this target: "} + e.what()};
                }
            }
            out << (outcome.solvable() ? "solvable" : "unsolvable") << '\n';
            if (witness && outcome.witness)
                for (Vertex u = 0; u < g.size(); ++u)
                    out << "map " << u << ' ' << (*outcome.witness)[u] << '\n';
            if (show_report) {
                if (route) {
                    out << route_line(*route) << '\n';
                    for (auto & n : route->notes)
                        out << "note: " << n << '\n';
                }
                else
                    out << "route: exact\n";
                out << "nodes: " << outcome.stats.nodes << '\n';
                out << "propagations: " << outcome.stats.propagations << '\n';
            }
            return outcome.solvable() ? 0 : 1;
        };
    });

    // core
    string core_in, core_out;
    optional<std::uint64_t> core_seed;
    auto core_cmd = app.add_subcommand("core", "Compute the core of a graph");
    core_cmd->add_option("--in", core_in, "Input graph (.tg)")->required();
    core_cmd->add_option("--out", core_out, "Output file, standard output if absent");
    core_cmd->add_option("--seed", core_seed, "Try vertices in a shuffled order");
    core_cmd->callback([&] {
        action = [&] {
            auto result = core(load_graph(core_in), core_seed);
            emit(serialize_tropical_graph(result.core), core_out, out);
            if (! core_out.empty())
                out << "core keeps" << join(result.vertices) << '\n';
            return 0;
        };
    });

    // features
    string features_target;
    auto features = app.add_subcommand("features", "List forcing vertices, unique features and the dispatch route");
    features->add_option("--target", features_target, "Target graph (.tg)")->required();
    features->callback([&] {
        action = [&] {
            auto h = load_graph(features_target);
            auto s = detect_features(h);
            out << "forcing:" << join(forcing_vertices(h)) << '\n';
            out << "type1:" << join(s.type1) << '\n';
            out << "type2:";
            for (auto & [u, v] : s.type2)
                out << ' ' << u << '-' << v;
            out << '\n';
            out << "type3:" << join(s.type3) << '\n';
            out << "type4:" << join(s.type4) << '\n';
            auto r = analyze_target(h);
            out << route_line(r) << '\n';
            for (auto & n : r.notes)
                out << "note: " << n << '\n';
            return 0;
        };
    });

    // enumerate
    string enum_source, enum_target;
    std::size_t limit = 1000;
    auto enumerate = app.add_subcommand("enumerate", "List homomorphisms in lexicographic order");
    enumerate->add_option("--source", enum_source, "Source graph (.tg)")->required();
    enumerate->add_option("--target", enum_target, "Target graph (.tg)")->required();
    enumerate->add_option("--limit", limit, "Stop after this many")->check(CLI::PositiveNumber);
    enumerate->callback([&] {
        action = [&] {
            auto e = enumerate_trop_homs(load_graph(enum_source), load_graph(enum_target), limit);
            for (auto & m : e.maps)
                out << "hom" << join(m) << '\n';
            out << "count " << e.maps.size() << '\n';
            if (e.truncated)
                out << "truncated\n";
            return e.maps.empty() ? 1 : 0;
        };
    });

    // gadget
    auto gadget = app.add_subcommand("gadget", "Write a reduction gadget as a .tg file");
    gadget->require_subcommand(1);
    string gadget_out, palette = "four", formula, graph_file, lists_file, digraph_file, zig_target, block;
    bool experimental = false;
    optional<int> k;

    auto palette_options = [&] (CLI::App * sub) {
        sub->add_option("--palette", palette, "four, three or two")->check(CLI::IsMember({"four", "three", "two"}));
        sub->add_option("--k", k, "Cycle length over two, at least 24");
        sub->add_flag("--experimental", experimental, "Allow the two colour palette");
        sub->add_option("--out", gadget_out, "Output file, standard output if absent");
    };
    auto out_option = [&] (CLI::App * sub) {
        sub->add_option("--out", gadget_out, "Output file, standard output if absent");
    };
    auto write_gadget = [&] (const GadgetGraph & g) {
        emit(serialize_gadget(g), gadget_out, out);
        return 0;
    };

    auto c48 = gadget->add_subcommand("c48", "The pair gadget target cycle");
    palette_options(c48);
    c48->callback([&] {
        action = [&] {
            auto p = checked_palette(palette, experimental);
            return write_gadget(build_c48(p, k.value_or(c48_minimum(p))));
        };
    });

    auto nae = gadget->add_subcommand("nae3sat", "Source graph for a monotone NAE 3-SAT formula");
    palette_options(nae);
    nae->add_option("--formula", formula, "DIMACS file, positive literals only")->required();
    nae->callback([&] {
        action = [&] {
            auto p = checked_palette(palette, experimental);
            auto f = load(formula, [] (const string & t) { return parse_dimacs_nae(t); });
            return write_gadget(nae3sat_to_c48(f, p, k.value_or(c48_minimum(p))));
        };
    });

    auto h9 = gadget->add_subcommand("h9", "The nine vertex target");
    out_option(h9);
    h9->callback([&] { action = [&] { return write_gadget(build_h9()); }; });

    auto h9_instance = gadget->add_subcommand("h9-instance", "Source graph for a list instance over C6");
    out_option(h9_instance);
    h9_instance->add_option("--graph", graph_file, "Source graph (.tg, colours ignored)")->required();
    h9_instance->add_option("--lists", lists_file, "Lists over cycle labels 1 to 6")->required();
    h9_instance->callback([&] {
        action = [&] {
            auto g = plain(load_graph(graph_file));
            auto lists = load(lists_file, [&] (const string & t) { return parse_lists(t, g.size()); });
            return write_gadget(c6_listhom_to_h9(g, lists));
        };
    });

    auto tropicalize = gadget->add_subcommand("tropicalize", "Three colour graph for a digraph");
    out_option(tropicalize);
    tropicalize->add_option("--digraph", digraph_file, "Digraph (.dg)")->required();
    tropicalize->callback([&] {
        action = [&] {
            auto d = load(digraph_file, [] (const string & t) { return parse_digraph(t); });
            emit(serialize_tropical_graph(tropicalize_digraph(d)), gadget_out, out);
            return 0;
        };
    });

    auto zigzag = gadget->add_subcommand("zigzag", "Two colour retraction target for a bipartite graph");
    out_option(zigzag);
    zigzag->add_option("--target", zig_target, "Bipartite graph (.tg, colours ignored)")->required();
    zigzag->callback([&] {
        action = [&] { return write_gadget(build_zigzag_gadget(plain(load_graph(zig_target)))); };
    });

    auto s_block = gadget->add_subcommand("s-block", "One of the S12, S1T and S2T blocks");
    out_option(s_block);
    s_block->add_option("--kind", block, "S12, S1T or S2T")->required();
    s_block->callback([&] { action = [&] { return write_gadget(build_s_block(parse_s_block(block))); }; });

    // verify
    auto verify = app.add_subcommand("verify", "Run a mechanical check and report PASS or FAIL");
    verify->require_subcommand(1);
    bool json = false;
    int l = 0, zk = 0, variables = 3, max_clauses = 2, instances = 200, max_vertices = 8, trials = 200, max_source = 8;
    std::uint64_t seed = default_seed;
    string verify_palette = "four", cross_target;
    bool verify_experimental = false;
    auto json_option = [&] (CLI::App * sub) { sub->add_flag("--json", json, "Write the report as JSON"); };

    auto claim = verify->add_subcommand("c48-claim", "Exactly two pinned maps of the pair gadget");
    json_option(claim);
    claim->add_option("--palette", verify_palette, "four, three or two")->check(CLI::IsMember({"four", "three", "two"}));
    claim->add_flag("--experimental", verify_experimental, "Allow the two colour palette");
    claim->callback([&] {
        action = [&] { return report_out(verify_c48_claim(checked_palette(verify_palette, verify_experimental)), json, out); };
    });

    auto pq = verify->add_subcommand("pq-lemma", "End colour behaviour of the P and Q paths");
    json_option(pq);
    pq->add_option("--palette", verify_palette, "four or three")->check(CLI::IsMember({"four", "three"}));
    pq->callback([&] { action = [&] { return report_out(verify_pq_lemma(parse_palette(verify_palette)), json, out); }; });

    auto zig = verify->add_subcommand("zigzag", "Properties of the zig-zag path families");
    json_option(zig);
    zig->add_option("--l", l, "Odd run count, 3 to 7")->required();
    zig->add_option("--k", zk, "Even run count, 2 to 6")->required();
    zig->callback([&] { action = [&] { return report_out(verify_zigzag_properties(l, zk), json, out); }; });

    auto roundtrip = verify->add_subcommand("roundtrip", "Reduction agrees with a brute force oracle");
    roundtrip->require_subcommand(1);
    auto rt_nae = roundtrip->add_subcommand("nae", "NAE 3-SAT through the pair gadget");
    json_option(rt_nae);
    rt_nae->add_option("--formula", formula, "One DIMACS formula; otherwise every small formula");
    rt_nae->add_option("--variables", variables, "Variables in the exhaustive sweep")->check(CLI::Range(3, 5));
    rt_nae->add_option("--max-clauses", max_clauses, "Clauses in the exhaustive sweep")->check(CLI::Range(0, 3));
    rt_nae->callback([&] {
        action = [&] {
            if (! formula.empty())
                return report_out(roundtrip_nae(load(formula, [] (const string & t) { return parse_dimacs_nae(t); })), json, out);
            return report_out(roundtrip_nae_all(variables, max_clauses), json, out);
        };
    });

    auto rt_h9 = roundtrip->add_subcommand("h9", "List homomorphism to C6 through the nine vertex target");
    json_option(rt_h9);
    rt_h9->add_option("--graph", graph_file, "Source graph (.tg); otherwise random instances");
    rt_h9->add_option("--lists", lists_file, "Lists over cycle labels 1 to 6");
    rt_h9->add_option("--instances", instances, "Random instances")->check(CLI::PositiveNumber);
    rt_h9->add_option("--seed", seed, "Random seed");
    rt_h9->add_option("--max-vertices", max_vertices, "Largest random source")->check(CLI::Range(1, 12));
    rt_h9->callback([&] {
        action = [&] {
            if (graph_file.empty() != lists_file.empty())
                throw InputError{"--graph and --lists go together"};
            if (! graph_file.empty()) {
                auto g = plain(load_graph(graph_file));
                auto lists = load(lists_file, [&] (const string & t) { return parse_lists(t, g.size()); });
                return report_out(roundtrip_h9(g, lists), json, out);
            }
            return report_out(roundtrip_h9_random(instances, seed, max_vertices), json, out);
        };
    });

    auto cross = verify->add_subcommand("cross-check", "Dispatcher against the exact solver on random sources");
    json_option(cross);
    cross->add_option("--target", cross_target, "Target graph (.tg)")->required();
    cross->add_option("--trials", trials, "Random sources")->check(CLI::PositiveNumber);
    cross->add_option("--seed", seed, "Random seed");
    cross->add_option("--max-source", max_source, "Largest random source")->check(CLI::Range(1, 12));
    cross->callback([&] {
        action = [&] { return report_out(cross_check_poly(load_graph(cross_target), trials, seed, max_source), json, out); };
    });

    try {
        vector<string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    }
    catch (const InputError & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const PreconditionError & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}
