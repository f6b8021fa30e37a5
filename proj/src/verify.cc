#include <tropical/verify.hh>
#include <tropical/errors.hh>
#include <tropical/poly.hh>
#include <tropical/solver.hh>

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace tropical;

using std::function;
using std::map;
using std::mt19937_64;
using std::set;
using std::string;
using std::to_string;
using std::uniform_int_distribution;
using std::vector;

auto Report::add(string check, bool ok, string detail, bool gating) -> void
{
    checks.push_back(Check{std::move(check), ok, std::move(detail), gating});
}

auto Report::note(string key, string value) -> void
{
    info.emplace_back(std::move(key), std::move(value));
}

auto Report::passed() const -> bool
{
    return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.passed || ! c.gating; });
}

auto Report::to_json() const -> string
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["result"] = passed() ? "PASS" : "FAIL";
    j["checks"] = nlohmann::ordered_json::array();
    for (auto & c : checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["result"] = c.passed ? "PASS" : "FAIL";
        entry["detail"] = c.detail;
        entry["gating"] = c.gating;
        j["checks"].push_back(entry);
    }
    j["info"] = nlohmann::ordered_json::object();
    for (auto & [key, value] : info)
        j["info"][key] = value;
    return j.dump(2);
}

auto Report::to_text() const -> string
{
    std::ostringstream out;
    for (auto & c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (! c.detail.empty())
            out << ": " << c.detail;
        if (! c.gating)
            out << " (informational)";
        out << '\n';
    }
    for (auto & [key, value] : info)
        out << "  " << key << ": " << value << '\n';
    out << name << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

namespace
{
    auto check_bound(int variables) -> void
    {
        if (variables > 24)
            throw InputError{"brute force limited to 24 variables, got " + to_string(variables)};
    }

    auto verdict(bool b) -> string
    {
        return b ? "satisfiable" : "unsatisfiable";
    }

    auto status(bool b) -> string
    {
        return b ? "Solvable" : "Unsolvable";
    }

    // Lists from colours with some vertices pinned.
    auto pinned(const GadgetGraph & source, const GadgetGraph & target, const map<string, string> & pins)
        -> ListAssignment
    {
        auto lists = colour_lists(source.graph, target.graph);
        for (auto & [from, to] : pins)
            lists.lists[source.named(from)] = {target.named(to)};
        return lists;
    }

    auto pair_pattern(const string & pair, bool rho) -> map<string, string>
    {
        if (rho)
            return {{"b0_" + pair, "b0"}, {"g1_" + pair, "g1"}, {"b1_" + pair, "b0"}, {"g2_" + pair, "g1"},
                {"b2_" + pair, "b0"}};
        return {{"b0_" + pair, "b0"}, {"g1_" + pair, "g1"}, {"b1_" + pair, "b1"}, {"g2_" + pair, "g2"},
            {"b2_" + pair, "b2"}};
    }

    auto describe(const map<string, string> & pattern) -> string
    {
        string result;
        for (auto & [from, to] : pattern)
            result += (result.empty() ? "" : ", ") + from + "->" + to;
        return result;
    }

    // Solvability with the first (or last) vertex of a pinned to that of b.
    auto rooted(const TropicalGraph & a, Vertex x, const TropicalGraph & b, Vertex y) -> bool
    {
        auto lists = colour_lists(a, b);
        lists.lists[x] = {y};
        return solve_list_hom(a, b, lists).solvable();
    }

    auto path_graph(const vector<string> & colours) -> TropicalGraph
    {
        vector<Edge> edges;
        for (int i = 0; i + 1 < int(colours.size()); ++i)
            edges.emplace_back(i, i + 1);
        return TropicalGraph{int(colours.size()), edges, colours};
    }

    auto cycle_graph(const vector<string> & colours) -> TropicalGraph
    {
        int n = int(colours.size());
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return TropicalGraph{n, edges, colours};
    }

    // Small witnesses for the two universally quantified properties: every
    // two-coloured path up to 9 vertices, every segment of the given paths,
    // and every two-coloured 4, 6 and 8 cycle.
    auto catalogue(const vector<vector<string>> & family) -> vector<TropicalGraph>
    {
        set<vector<string>> paths;
        for (int n = 1; n <= 9; ++n)
            for (int mask = 0; mask < (1 << n); ++mask) {
                vector<string> colours;
                for (int i = 0; i < n; ++i)
                    colours.push_back((mask >> i) & 1 ? "Black" : "White");
                paths.insert(colours);
            }
        for (auto & p : family)
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = a + 2; b <= p.size(); ++b)
                    paths.insert(vector<string>(p.begin() + a, p.begin() + b));

        vector<TropicalGraph> result;
        for (auto & p : paths)
            result.push_back(path_graph(p));
        for (int n : {4, 6, 8})
            for (int mask = 0; mask < (1 << n); ++mask) {
                vector<string> colours;
                for (int i = 0; i < n; ++i)
                    colours.push_back((mask >> i) & 1 ? "Black" : "White");
                result.push_back(cycle_graph(colours));
            }
        return result;
    }

    struct Family
    {
        int runs;
        bool right_end;
    };

    auto end_of(const TropicalGraph & g, bool right_end) -> Vertex
    {
        return right_end ? g.size() - 1 : 0;
    }

    auto is_onto(const VertexMap & m, int size) -> bool
    {
        vector<char> hit(size, 0);
        for (auto x : m)
            hit[x] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
    }

    // Properties for one family: onto the forcing path, rooted maps between
    // members, the plain path onto each member, and the catalogue property.
    auto family_properties(Report & r, const Family & f, int onto, int distinct, int plain, int universal) -> void
    {
        string label = f.right_end ? "P" : "Q";
        auto base = zigzag_path(f.runs);
        vector<TropicalGraph> members;
        for (int i = 1; i <= f.runs - 2; ++i)
            members.push_back(zigzag_path(f.runs, i));

        auto fp = forcing_path(f.runs);
        bool all_onto = true;
        string bad;
        for (int i = 0; i <= f.runs - 2; ++i) {
            auto & g = i == 0 ? base : members[i - 1];
            auto maps = enumerate_trop_homs(g, fp);
            bool any = std::any_of(maps.maps.begin(), maps.maps.end(), [&](const VertexMap & m) { return is_onto(m, fp.size()); });
            if (! any) {
                all_onto = false;
                bad += " " + label + (i ? "_" + to_string(i) : "");
            }
        }
        r.add("property " + to_string(onto) + ": " + label + " paths map onto the forcing path", all_onto,
            "forcing path has " + to_string(fp.size()) + " vertices" + (bad.empty() ? "" : "; failing:" + bad));

        bool exact = true;
        string mirrors;
        for (int i = 1; i <= f.runs - 2; ++i)
            for (int j = 1; j <= f.runs - 2; ++j) {
                auto & a = members[i - 1];
                auto & b = members[j - 1];
                bool maps = rooted(a, end_of(a, f.right_end), b, end_of(b, f.right_end));
                if (maps != (i == j)) {
                    exact = false;
                    bad = label + "_" + to_string(i) + " -> " + label + "_" + to_string(j);
                }
                if (i != j && solve_trop_hom(a, b).solvable())
                    mirrors += (mirrors.empty() ? "" : ", ") + label + "_" + to_string(i) + " -> " + label + "_" + to_string(j);
            }
        r.add("property " + to_string(distinct) + ": " + label + "_i -> " + label + "_j only when i = j", exact,
            exact ? "designated end to designated end" : "counterexample " + bad);
        r.add("unrooted " + label + "_i -> " + label + "_j", true,
            mirrors.empty() ? "none for i != j" : "reversed copies map: " + mirrors, false);

        bool all_plain = true;
        for (int i = 1; i <= f.runs - 2; ++i)
            if (! rooted(base, end_of(base, f.right_end), members[i - 1], end_of(members[i - 1], f.right_end)))
                all_plain = false;
        r.add("property " + to_string(plain) + ": " + label + " -> " + label + "_i for every i", all_plain);

        vector<vector<string>> family{zigzag_colours(f.runs)};
        for (int i = 1; i <= f.runs - 2; ++i)
            family.push_back(zigzag_colours(f.runs, i));
        int premises = 0, tested = 0;
        bool holds = true;
        string witness;
        for (auto & x_graph : catalogue(family))
            for (Vertex x = 0; x < x_graph.size(); ++x) {
                ++tested;
                int hits = 0;
                for (auto & m : members)
                    if (rooted(x_graph, x, m, end_of(m, f.right_end)) && ++hits >= 2)
                        break;
                if (hits < 2)
                    continue;
                ++premises;
                if (! rooted(x_graph, x, base, end_of(base, f.right_end))) {
                    holds = false;
                    string colours;
                    for (Vertex v = 0; v < x_graph.size(); ++v)
                        colours += x_graph.colour_name(v) == "White" ? 'W' : 'B';
                    witness = colours + " at " + to_string(x);
                }
            }
        r.add("property " + to_string(universal) + ": two distinct " + label + "_i images give a map to " + label
                + " (spot-checked)",
            holds,
            to_string(tested) + " rooted graphs, " + to_string(premises) + " with two images"
                + (witness.empty() ? "" : "; counterexample " + witness));
    }

    // Naive list homomorphism search to the six-cycle labelled 1 to 6.
    auto c6_list_brute(const Graph & g, const vector<vector<int>> & lists) -> bool
    {
        int n = g.size();
        vector<int> f(n, 0);
        auto adjacent = [](int a, int b) { return (a - b + 6) % 6 == 1 || (b - a + 6) % 6 == 1; };
        function<bool(int)> go = [&](int v) -> bool {
            if (v == n)
                return true;
            for (auto label : lists[v]) {
                bool ok = true;
                for (auto w : g.neighbours(v))
                    if (w < v && ! adjacent(label, f[w]))
                        ok = false;
                if (ok) {
                    f[v] = label;
                    if (go(v + 1))
                        return true;
                }
            }
            return false;
        };
        return go(0);
    }

    auto random_source(mt19937_64 & rng, const TropicalGraph & target, int max_n) -> TropicalGraph
    {
        int n = uniform_int_distribution<int>{1, max_n}(rng);
        auto palette = target.size() ? target.palette() : vector<string>{"X"};
        auto pick_colour = [&] { return palette[uniform_int_distribution<std::size_t>{0, palette.size() - 1}(rng)]; };
        vector<Edge> edges;
        vector<string> colours;
        if (target.size() == 0 || uniform_int_distribution<int>{0, 3}(rng) == 0) {
            std::bernoulli_distribution edge(0.3);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (edge(rng))
                        edges.emplace_back(u, v);
            for (int v = 0; v < n; ++v)
                colours.push_back(pick_colour());
            return TropicalGraph{n, edges, colours};
        }

        vector<Vertex> image(n);
        for (auto & x : image)
            x = uniform_int_distribution<int>{0, target.size() - 1}(rng);
        std::bernoulli_distribution keep(0.6), noise(0.04);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((target.adjacent(image[u], image[v]) && keep(rng)) || noise(rng))
                    edges.emplace_back(u, v);
        for (auto x : image)
            colours.push_back(target.colour_name(x));
        if (uniform_int_distribution<int>{0, 4}(rng) == 0)
            colours[uniform_int_distribution<int>{0, n - 1}(rng)] = pick_colour();
        return TropicalGraph{n, edges, colours};
    }
}

auto tropical::nae_brute(const NaeFormula & f) -> bool
{
    check_bound(f.variables);
    validate_nae(f);
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.variables); ++a) {
        bool ok = true;
        for (auto & c : f.clauses) {
            int ones = int((a >> c[0]) & 1) + int((a >> c[1]) & 1) + int((a >> c[2]) & 1);
            if (ones == 0 || ones == 3) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

auto tropical::sat_brute(const CnfFormula & f) -> bool
{
    check_bound(f.variables);
    validate_cnf(f);
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.variables); ++a) {
        bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const vector<Literal> & c) {
            return std::any_of(c.begin(), c.end(), [&](const Literal & l) { return bool((a >> l.variable) & 1) == l.positive; });
        });
        if (ok)
            return true;
    }
    return false;
}

auto tropical::verify_c48_claim(Palette palette) -> Report
{
    Report r{"c48-claim", {}, {}};
    bool gating = palette != Palette::Two;
    int k = c48_minimum(palette);
    r.note("palette", palette_name(palette));
    r.note("cycle length", to_string(2 * k));
    if (! gating)
        r.note("status", "experimental two colour variant, advisory only");

    auto target = build_c48(palette, k);
    auto pair = nae3sat_to_c48(NaeFormula{2, {}}, palette, k);
    auto maps = enumerate_homs(pair.graph, target.graph, pinned(pair, target, {{"U_G", "g0"}}));
    r.add("pinned maps of the pair gadget", maps.maps.size() == 2,
        to_string(maps.maps.size()) + " maps with U_G on g0, expected 2", gating);

    map<Vertex, string> label_of;
    for (auto & [label, v] : target.names)
        label_of[v] = label;
    set<map<string, string>> seen;
    for (auto & m : maps.maps) {
        map<string, string> pattern;
        for (auto & [label, expected] : pair_pattern("x0x1", false)) {
            auto image = m[pair.named(label)];
            pattern[label] = label_of.count(image) ? label_of[image] : "vertex " + to_string(image);
        }
        seen.insert(pattern);
    }
    set<map<string, string>> expected{pair_pattern("x0x1", false), pair_pattern("x0x1", true)};
    string detail;
    for (auto & p : seen)
        detail += (detail.empty() ? "" : "; ") + describe(p);
    r.add("named images are sigma and rho", seen == expected, detail, gating);

    auto triple = nae3sat_to_c48(NaeFormula{3, {}}, palette, k);
    const vector<string> pairs{"x0x1", "x0x2", "x1x2"};
    bool parity = true;
    string extend;
    for (int mask = 0; mask < 8; ++mask) {
        map<string, string> pins{{"U_G", "g0"}};
        int rhos = 0;
        for (int i = 0; i < 3; ++i) {
            bool rho = (mask >> i) & 1;
            rhos += rho;
            auto part = pair_pattern(pairs[i], rho);
            pins.insert(part.begin(), part.end());
        }
        bool ok = solve_list_hom(triple.graph, target.graph, pinned(triple, target, pins)).solvable();
        if (ok)
            extend += string(extend.empty() ? "" : " ") + ((mask & 1) ? "r" : "s") + ((mask & 2) ? "r" : "s")
                + ((mask & 4) ? "r" : "s");
        parity = parity && ok == (rhos % 2 == 1);
    }
    r.add("triple gadget extends exactly the odd rho choices", parity, "extending choices: " + extend, gating);

    auto unpinned = enumerate_homs(pair.graph, target.graph, colour_lists(pair.graph, target.graph), 10000);
    r.add("unpinned maps come in pairs", unpinned.maps.size() % 2 == 0 && ! unpinned.truncated,
        to_string(unpinned.maps.size()) + " maps without pinning", false);
    return r;
}

auto tropical::verify_pq_lemma(Palette palette) -> Report
{
    Report r{"pq-lemma", {}, {}};
    r.note("palette", palette_name(palette));
    auto other = [](const string & c) { return c == "G" ? string{"B"} : string{"G"}; };
    for (auto kind : {PathKind::P, PathKind::Q})
        for (string x : {"G", "B"})
            for (string u : {"G", "B"}) {
                auto from = build_pq_path(kind, x, other(x), palette).graph;
                auto to = build_pq_path(PathKind::P, u, other(u), palette).graph;
                bool expected = kind == PathKind::Q || x == u;
                bool got = solve_trop_hom(from, to).solvable();
                string name = string(kind == PathKind::P ? "P" : "Q") + "(" + x + "," + other(x) + ") -> P(" + u
                    + "," + other(u) + ")";
                r.add(name, got == expected, status(got) + ", expected " + status(expected));
            }
    return r;
}

auto tropical::verify_zigzag_properties(int l, int k) -> Report
{
    if (l < 3 || l > 7 || l % 2 == 0)
        throw InputError{"l must be odd, from 3 to 7"};
    if (k < 2 || k > 6 || k % 2 == 1)
        throw InputError{"k must be even, from 2 to 6"};
    Report r{"zigzag", {}, {}};
    r.note("l", to_string(l));
    r.note("k", to_string(k));
    family_properties(r, Family{l, true}, 1, 3, 5, 7);
    family_properties(r, Family{k, false}, 2, 4, 6, 8);
    std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check & a, const Check & b) {
        auto key = [](const Check & c) { return c.name.rfind("property ", 0) == 0 ? c.name[9] - '0' : 9; };
        return key(a) < key(b);
    });
    return r;
}

auto tropical::roundtrip_nae(const NaeFormula & f, Palette palette) -> Report
{
    Report r{"roundtrip-nae3sat", {}, {}};
    bool expected = nae_brute(f);
    auto gadget = nae3sat_to_c48(f, palette, c48_minimum(palette));
    bool got = solve_trop_hom(gadget.graph, build_c48(palette, c48_minimum(palette)).graph).solvable();
    r.add("formula verdict matches the gadget", got == expected,
        "formula " + verdict(expected) + ", gadget " + status(got));
    r.note("gadget vertices", to_string(gadget.graph.size()));
    return r;
}

auto tropical::roundtrip_nae_all(int variables, int max_clauses) -> Report
{
    if (variables < 3 || variables > 5 || max_clauses < 0 || max_clauses > 3)
        throw InputError{"round trip sweep limited to 3 to 5 variables and 3 clauses"};
    vector<std::array<int, 3>> clauses;
    for (int a = 0; a < variables; ++a)
        for (int b = 0; b < variables; ++b)
            for (int c = 0; c < variables; ++c)
                if (a != b && a != c && b != c)
                    clauses.push_back({a, b, c});

    Report r{"roundtrip-nae3sat", {}, {}};
    auto target = build_c48();
    int formulas = 0, satisfiable = 0, mismatches = 0;
    string first_bad;
    function<void(std::size_t, NaeFormula &)> visit = [&](std::size_t next, NaeFormula & f) {
        ++formulas;
        bool expected = nae_brute(f);
        satisfiable += expected;
        bool got = solve_trop_hom(nae3sat_to_c48(f).graph, target.graph).solvable();
        if (got != expected && mismatches++ == 0) {
            for (auto & c : f.clauses)
                first_bad += "(" + to_string(c[0]) + " " + to_string(c[1]) + " " + to_string(c[2]) + ")";
        }
        if (int(f.clauses.size()) == max_clauses)
            return;
        for (auto i = next; i < clauses.size(); ++i) {
            f.clauses.push_back(clauses[i]);
            visit(i + 1, f);
            f.clauses.pop_back();
        }
    };
    NaeFormula f{variables, {}};
    visit(0, f);
    r.add("formula verdicts match the gadgets", mismatches == 0,
        to_string(mismatches) + " mismatches" + (first_bad.empty() ? "" : ", first " + first_bad));
    r.note("formulas", to_string(formulas));
    r.note("satisfiable", to_string(satisfiable));
    return r;
}

auto tropical::roundtrip_h9(const Graph & g, const vector<vector<int>> & lists) -> Report
{
    Report r{"roundtrip-h9", {}, {}};
    auto gadget = c6_listhom_to_h9(g, lists);
    bool expected = c6_list_brute(g, lists);
    bool got = solve_trop_hom(gadget.graph, build_h9().graph).solvable();
    r.add("list homomorphism verdict matches the gadget", got == expected,
        "lists " + status(expected) + ", gadget " + status(got));
    return r;
}

auto tropical::roundtrip_h9_random(int instances, std::uint64_t seed, int max_vertices) -> Report
{
    if (max_vertices < 1 || max_vertices > 12)
        throw InputError{"h9 round trips limited to 12 source vertices"};
    Report r{"roundtrip-h9", {}, {}};
    mt19937_64 rng{seed};
    auto target = build_h9().graph;
    int yes = 0, mismatches = 0;
    for (int trial = 0; trial < instances; ++trial) {
        int n = uniform_int_distribution<int>{1, max_vertices}(rng);
        vector<int> side(n);
        for (auto & s : side)
            s = int(rng() % 2);
        vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (side[u] != side[v] && rng() % 2)
                    edges.emplace_back(u, v);
        Graph g{n, edges};

        vector<vector<int>> lists(n);
        for (int v = 0; v < n; ++v) {
            int parity = side[v] ^ int(rng() % 5 == 0);
            for (int label = 1 + parity; label <= 6; label += 2)
                if (rng() % 2)
                    lists[v].push_back(label);
            if (lists[v].empty())
                lists[v].push_back(1 + parity + 2 * int(rng() % 3));
        }

        bool expected = c6_list_brute(g, lists);
        yes += expected;
        bool got = solve_trop_hom(c6_listhom_to_h9(g, lists).graph, target).solvable();
        mismatches += got != expected;
    }
    r.add("list homomorphism verdicts match the gadgets", mismatches == 0, to_string(mismatches) + " mismatches");
    r.note("seed", to_string(seed));
    r.note("instances", to_string(instances));
    r.note("solvable", to_string(yes));
    return r;
}

auto tropical::cross_check_poly(const TropicalGraph & target, int trials, std::uint64_t seed, int max_source)
    -> Report
{
    Report r{"cross-check", {}, {}};
    mt19937_64 rng{seed};
    int yes = 0, mismatches = 0, bad_witness = 0;
    map<string, int> routes;
    for (int trial = 0; trial < trials; ++trial) {
        auto source = random_source(rng, target, max_source);
        auto [outcome, report] = dispatch_solve(source, target);
        bool expected = solve_trop_hom(source, target).solvable();
        yes += expected;
        mismatches += outcome.solvable() != expected;
        if (outcome.solvable() && ! validate_hom(source, target, *outcome.witness))
            ++bad_witness;
        string route;
        for (auto s : report.route)
            route += (route.empty() ? "" : "+") + step_name(s);
        ++routes[route];
    }
    r.add("dispatch agrees with the exact solver", mismatches == 0, to_string(mismatches) + " mismatches");
    r.add("dispatch witnesses are homomorphisms", bad_witness == 0, to_string(bad_witness) + " invalid");
    r.note("seed", to_string(seed));
    r.note("trials", to_string(trials));
    r.note("solvable", to_string(yes));
    for (auto & [route, count] : routes)
        r.note("route " + route, to_string(count));
    return r;
}
