#include <tropical/gadgets.hh>
#include <tropical/core.hh>
#include <tropical/errors.hh>
#include <tropical/poly.hh>
#include <tropical/solver.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

using namespace tropical;

using std::function;
using std::map;
using std::mt19937_64;
using std::string;
using std::uniform_int_distribution;
using std::vector;

namespace
{
    auto colours_of(const TropicalGraph & g) -> vector<string>
    {
        vector<string> result;
        for (Vertex v = 0; v < g.size(); ++v)
            result.push_back(g.colour_name(v));
        return result;
    }

    auto counts(const TropicalGraph & g) -> map<string, int>
    {
        map<string, int> result;
        for (Vertex v = 0; v < g.size(); ++v)
            ++result[g.colour_name(v)];
        return result;
    }

    auto split(const string & s) -> vector<string>
    {
        vector<string> result;
        for (char c : s)
            result.emplace_back(1, c);
        return result;
    }

    auto expand(const string & s) -> vector<string>
    {
        vector<string> result;
        for (char c : s)
            result.push_back(c == 'W' ? "White" : "Black");
        return result;
    }

    // Simple cycle: connected, every vertex of degree two.
    auto is_cycle(const Graph & g) -> bool
    {
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.degree(v) != 2)
                return false;
        return is_connected(g);
    }

    auto choose(int n, int r) -> int
    {
        int result = 1;
        for (int i = 0; i < r; ++i)
            result = result * (n - i) / (i + 1);
        return result;
    }

    // Counts homomorphisms by depth first search over vertices in index order.
    auto count_homs(const Graph & source, const Graph & target, const ListAssignment & lists) -> long
    {
        int n = source.size();
        VertexMap f(n, -1);
        long found = 0;
        function<void(int)> go = [&](int i) {
            if (i == n) {
                ++found;
                return;
            }
            for (auto t : lists.lists[i]) {
                bool ok = true;
                for (auto w : source.neighbours(i))
                    if (w < i && ! target.adjacent(t, f[w]))
                        ok = false;
                if (ok) {
                    f[i] = t;
                    go(i + 1);
                }
            }
        };
        go(0);
        return found;
    }

    auto digraph_hom_brute(const Digraph & a, const Digraph & b) -> bool
    {
        int n = a.size(), d = b.size();
        if (n == 0)
            return true;
        if (d == 0)
            return false;
        vector<int> f(n, 0);
        while (true) {
            bool ok = true;
            for (auto & [u, v] : a.arcs())
                if (! b.has_arc(f[u], f[v]))
                    ok = false;
            if (ok)
                return true;
            int i = n - 1;
            while (i >= 0 && f[i] == d - 1)
                f[i--] = 0;
            if (i < 0)
                return false;
            ++f[i];
        }
    }

    auto random_digraph(mt19937_64 & rng, int n) -> Digraph
    {
        vector<Edge> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng() % 3 == 0)
                    arcs.emplace_back(u, v);
        return Digraph{n, arcs};
    }

    auto c6() -> Graph
    {
        return Graph{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}};
    }

    auto pinned_lists(const GadgetGraph & source, const GadgetGraph & target,
        const map<string, string> & pins) -> ListAssignment
    {
        auto lists = oracle::colour_lists_naive(source.graph, target.graph);
        for (auto & [from, to] : pins)
            lists.lists[source.named(from)] = {target.named(to)};
        return lists;
    }

    auto sigma(const string & pair) -> map<string, string>
    {
        return {{"b0_" + pair, "b0"}, {"g1_" + pair, "g1"}, {"b1_" + pair, "b1"}, {"g2_" + pair, "g2"},
            {"b2_" + pair, "b2"}};
    }

    auto rho(const string & pair) -> map<string, string>
    {
        return {{"b0_" + pair, "b0"}, {"g1_" + pair, "g1"}, {"b1_" + pair, "b0"}, {"g2_" + pair, "g1"},
            {"b2_" + pair, "b0"}};
    }
}

TEST_CASE("p and q path colours")
{
    CHECK(pq_colours(PathKind::P, "G", "B") == split("GYYYYRYYB"));
    CHECK(pq_colours(PathKind::P, "B", "G") == split("BYYYYRYYG"));
    CHECK(pq_colours(PathKind::Q, "G", "B") == split("GYYYYRYYYYB"));
    CHECK(pq_colours(PathKind::P, "G", "B", Palette::Three) == split("GYYYYBYYB"));
    CHECK(pq_colours(PathKind::P, "G", "B", Palette::Four, 1) == split("GYYYYYYRYYB"));
    CHECK(pq_colours(PathKind::Q, "G", "B", Palette::Four, 1) == split("GYYYYYYRYYYYYYB"));
    CHECK(pq_colours(PathKind::P, "G", "B", Palette::Two) == expand("BWWWWBBWWB"));
    CHECK(pq_colours(PathKind::Q, "G", "B", Palette::Two) == expand("BWWWWBBWWWWB"));

    CHECK_THROWS_AS(pq_colours(PathKind::P, "G", "G"), InputError);
    CHECK_THROWS_AS(pq_colours(PathKind::Q, "G", "R"), InputError);
    CHECK_THROWS_AS(pq_colours(PathKind::P, "G", "B", Palette::Four, -1), InputError);

    auto p = build_pq_path(PathKind::P, "G", "B");
    CHECK(p.graph.size() == 9);
    CHECK(p.graph.edges().size() == 8);
    CHECK(p.named("start") == 0);
    CHECK(p.named("end") == 8);
    CHECK_THROWS_AS(p.named("middle"), InputError);
}

TEST_CASE("p and q mapping facts")
{
    for (auto palette : {Palette::Four, Palette::Three}) {
        for (string x : {"G", "B"})
            for (string u : {"G", "B"}) {
                string y = x == "G" ? "B" : "G", v = u == "G" ? "B" : "G";
                auto from_p = build_pq_path(PathKind::P, x, y, palette).graph;
                auto from_q = build_pq_path(PathKind::Q, x, y, palette).graph;
                auto to = build_pq_path(PathKind::P, u, v, palette).graph;
                CHECK(oracle::trop_hom_exists(from_p, to) == (x == u));
                CHECK(solve_trop_hom(from_p, to).solvable() == (x == u));
                CHECK(oracle::trop_hom_exists(from_q, to));
                CHECK(solve_trop_hom(from_q, to).solvable());
            }
    }

    // Longer sources still cover shorter arcs, in the same orientation only.
    for (int big = 0; big <= 2; ++big)
        for (int small = 0; small <= big; ++small) {
            auto p = build_pq_path(PathKind::P, "G", "B", Palette::Four, big).graph;
            auto q = build_pq_path(PathKind::Q, "G", "B", Palette::Four, big).graph;
            auto forward = build_pq_path(PathKind::P, "G", "B", Palette::Four, small).graph;
            auto backward = build_pq_path(PathKind::P, "B", "G", Palette::Four, small).graph;
            CHECK(oracle::trop_hom_exists(p, forward));
            CHECK(! oracle::trop_hom_exists(p, backward));
            CHECK(oracle::trop_hom_exists(q, forward));
            CHECK(oracle::trop_hom_exists(q, backward));
        }
}

TEST_CASE("the target cycle")
{
    auto c = build_c48();
    CHECK(c.graph.size() == 48);
    CHECK(is_cycle(c.graph));
    CHECK(counts(c.graph) == map<string, int>{{"G", 3}, {"B", 3}, {"R", 6}, {"Y", 36}});
    vector<string> labels{"g0", "b0", "g1", "b1", "g2", "b2"};
    for (int i = 0; i < 6; ++i) {
        CHECK(c.named(labels[i]) == 8 * i);
        CHECK(c.graph.colour_name(8 * i) == (i % 2 == 0 ? "G" : "B"));
    }
    CHECK(is_core(c.graph));

    // Yellow vertices next to a non-Yellow vertex are exactly the forcing ones.
    vector<Vertex> expected;
    for (Vertex v = 0; v < 48; ++v)
        if (c.graph.colour_name(v) == "Y")
            for (auto w : c.graph.neighbours(v))
                if (c.graph.colour_name(w) != "Y") {
                    expected.push_back(v);
                    break;
                }
    CHECK(expected.size() == 24);
    CHECK(forcing_vertices(c.graph) == expected);

    auto three = build_c48(Palette::Three);
    CHECK(counts(three.graph) == map<string, int>{{"G", 3}, {"B", 9}, {"Y", 36}});

    auto longer = build_c48(Palette::Four, 31);
    CHECK(longer.graph.size() == 62);
    CHECK(is_cycle(longer.graph));
    CHECK(counts(longer.graph) == map<string, int>{{"G", 3}, {"B", 3}, {"R", 6}, {"Y", 50}});
    CHECK(c48_source_extra(Palette::Four, 31) == 2);
    CHECK(c48_source_extra(Palette::Four, 24) == 0);

    auto two = build_c48(Palette::Two, 27);
    CHECK(two.graph.size() == 54);
    CHECK(is_cycle(two.graph));
    CHECK(counts(two.graph) == map<string, int>{{"Black", 18}, {"White", 36}});

    CHECK_THROWS_AS(build_c48(Palette::Four, 23), InputError);
    CHECK_THROWS_AS(build_c48(Palette::Two, 26), InputError);
}

TEST_CASE("nae gadget sizes")
{
    for (int v = 0; v <= 5; ++v)
        for (int c = 0; c <= (v >= 3 ? 3 : 0); ++c) {
            NaeFormula f{v, {}};
            for (int i = 0; i < c; ++i)
                f.clauses.push_back({i % v, (i + 1) % v, (i + 2) % v});
            auto g = nae3sat_to_c48(f);
            CHECK(g.graph.size() == 1 + 53 * choose(v, 2) + 132 * choose(v, 3) + 33 * c);
            CHECK(g.graph.colour_name(g.named("U_G")) == "G");
        }

    auto pair = nae3sat_to_c48(NaeFormula{2, {}});
    CHECK(pair.graph.size() == 54);
    CHECK(is_cycle(pair.graph));

    CHECK_THROWS_AS(nae3sat_to_c48(NaeFormula{3, {{0, 1, 1}}}), InputError);
    CHECK_THROWS_AS(nae3sat_to_c48(NaeFormula{3, {{0, 1, 3}}}), InputError);
    CHECK_THROWS_AS(nae3sat_to_c48(NaeFormula{3, {{0, -1, 2}}}), InputError);
}

TEST_CASE("pair gadget has exactly two pinned maps")
{
    auto target = build_c48();
    auto source = nae3sat_to_c48(NaeFormula{2, {}});
    auto lists = pinned_lists(source, target, {{"U_G", "g0"}});
    CHECK(count_homs(source.graph, target.graph, lists) == 2);

    auto all = enumerate_homs(source.graph, target.graph, lists);
    REQUIRE(all.maps.size() == 2);
    std::set<map<string, string>> seen;
    for (auto & m : all.maps) {
        map<string, string> pattern;
        for (auto & label : {"b0_x0x1", "g1_x0x1", "b1_x0x1", "g2_x0x1", "b2_x0x1"}) {
            for (auto & [name, index] : target.names)
                if (index == m[source.named(label)])
                    pattern[label] = name;
        }
        seen.insert(pattern);
    }
    CHECK(seen == std::set<map<string, string>>{sigma("x0x1"), rho("x0x1")});

    auto three = build_c48(Palette::Three);
    auto source3 = nae3sat_to_c48(NaeFormula{2, {}}, Palette::Three);
    CHECK(count_homs(source3.graph, three.graph, pinned_lists(source3, three, {{"U_G", "g0"}})) == 2);

    auto longer = build_c48(Palette::Four, 27);
    auto source_long = nae3sat_to_c48(NaeFormula{2, {}}, Palette::Four, 27);
    // Longer source paths have slack inside, but the named images do not.
    seen.clear();
    for (auto & m : enumerate_homs(source_long.graph, longer.graph, pinned_lists(source_long, longer, {{"U_G", "g0"}})).maps) {
        map<string, string> pattern;
        for (auto & label : {"b0_x0x1", "g1_x0x1", "b1_x0x1", "g2_x0x1", "b2_x0x1"})
            for (auto & [name, index] : longer.names)
                if (index == m[source_long.named(label)])
                    pattern[label] = name;
        seen.insert(pattern);
    }
    CHECK(seen == std::set<map<string, string>>{sigma("x0x1"), rho("x0x1")});
}

TEST_CASE("triple gadget extends exactly the odd rho choices")
{
    auto target = build_c48();
    auto source = nae3sat_to_c48(NaeFormula{3, {}});
    vector<string> pairs{"x0x1", "x0x2", "x1x2"};
    for (int mask = 0; mask < 8; ++mask) {
        map<string, string> pins{{"U_G", "g0"}};
        int rhos = 0;
        for (int i = 0; i < 3; ++i) {
            auto part = (mask >> i) & 1 ? rho(pairs[i]) : sigma(pairs[i]);
            rhos += (mask >> i) & 1;
            pins.insert(part.begin(), part.end());
        }
        auto lists = pinned_lists(source, target, pins);
        CHECK(solve_list_hom(source.graph, target.graph, lists).solvable() == (rhos % 2 == 1));
    }
}

TEST_CASE("nae gadget soundness on tiny formulas")
{
    auto target = build_c48();
    NaeFormula one{3, {{0, 1, 2}}};
    CHECK(solve_trop_hom(nae3sat_to_c48(one).graph, target.graph).solvable());

    // Every triple of five variables: one side always holds three of them.
    NaeFormula all{5, {}};
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c)
                all.clauses.push_back({a, b, c});
    auto big = nae3sat_to_c48(all);
    CHECK(big.graph.size() == 2181);
    CHECK(! solve_trop_hom(big.graph, target.graph).solvable());

    // With four variables a two and two split works.
    NaeFormula four{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    CHECK(solve_trop_hom(nae3sat_to_c48(four).graph, target.graph).solvable());
}

TEST_CASE("tropicalized digraphs")
{
    auto t = tropicalize_digraph(Digraph{2, {{0, 1}}});
    CHECK(t.size() == 4);
    CHECK(colours_of(t) == vector<string>{"Blue", "Blue", "Red", "Green"});
    CHECK(t.edges() == vector<Edge>{{0, 2}, {1, 3}, {2, 3}});

    auto empty = tropicalize_digraph(Digraph{3});
    CHECK(empty.size() == 3);
    CHECK(empty.edges().empty());
    CHECK(counts(empty) == map<string, int>{{"Blue", 3}});

    auto both = tropicalize_digraph(Digraph{2, {{0, 1}, {1, 0}}});
    CHECK(both.size() == 6);

    mt19937_64 rng{11};
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_digraph(rng, uniform_int_distribution<int>{1, 4}(rng));
        auto b = random_digraph(rng, uniform_int_distribution<int>{1, 3}(rng));
        auto ta = tropicalize_digraph(a), tb = tropicalize_digraph(b);
        CHECK(ta.size() == a.size() + 2 * int(a.arcs().size()));
        bool expected = digraph_hom_brute(a, b);
        CHECK(oracle::trop_hom_exists(ta, tb) == expected);
        CHECK(solve_trop_hom(ta, tb).solvable() == expected);
    }
}

TEST_CASE("h9 target")
{
    auto h = build_h9();
    CHECK(h.graph.size() == 9);
    CHECK(counts(h.graph) == map<string, int>{{"Black", 6}, {"Red", 1}, {"Green", 1}, {"Yellow", 1}});
    for (int i = 1; i <= 6; ++i)
        CHECK(h.named(std::to_string(i)) == i - 1);
    CHECK(h.graph.adjacent(h.named("red"), h.named("1")));
    CHECK(h.graph.adjacent(h.named("green"), h.named("3")));
    CHECK(h.graph.adjacent(h.named("yellow"), h.named("5")));
    CHECK(is_core(h.graph));
    CHECK(bipartition(h.graph));
}

TEST_CASE("h9 list gadgets")
{
    Graph single{1};
    auto red = c6_listhom_to_h9(single, {{1}});
    CHECK(colours_of(red.graph) == vector<string>{"Black", "Red"});
    CHECK(red.graph.edges() == vector<Edge>{{0, 1}});
    CHECK(red.named("u0") == 0);

    auto two = c6_listhom_to_h9(single, {{2}});
    CHECK(counts(two.graph) == map<string, int>{{"Black", 3}, {"Red", 1}, {"Green", 1}});
    CHECK(two.graph.degree(0) == 2);

    auto pair = c6_listhom_to_h9(single, {{4, 2}});
    CHECK(colours_of(pair.graph) == vector<string>{"Black", "Black", "Green"});
    CHECK(pair.graph.edges() == vector<Edge>{{0, 1}, {1, 2}});

    auto odd_pair = c6_listhom_to_h9(single, {{1, 3}});
    CHECK(odd_pair.graph.size() == 6);
    CHECK(odd_pair.graph.degree(0) == 1);

    auto odd = c6_listhom_to_h9(single, {{1, 3, 5}});
    CHECK(colours_of(odd.graph) == vector<string>{"Black", "Black", "Black", "Red"});
    CHECK(odd.graph.edges() == vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

    auto even = c6_listhom_to_h9(single, {{2, 4, 6}});
    CHECK(colours_of(even.graph) == vector<string>{"Black", "Black", "Black", "Black", "Red"});

    CHECK_THROWS_AS(c6_listhom_to_h9(single, {{1, 2}}), InputError);
    CHECK_THROWS_AS(c6_listhom_to_h9(single, {{}}), InputError);
    CHECK_THROWS_AS(c6_listhom_to_h9(single, {{7}}), InputError);
    CHECK_THROWS_AS(c6_listhom_to_h9(single, {{1}, {1}}), InputError);

    // Every single vertex list pins the image set exactly.
    auto target = build_h9();
    vector<vector<int>> shapes{{1}, {2}, {3}, {4}, {5}, {6}, {1, 3}, {3, 5}, {1, 5}, {2, 4}, {4, 6}, {2, 6},
        {1, 3, 5}, {2, 4, 6}};
    for (auto & shape : shapes) {
        auto g = c6_listhom_to_h9(single, {shape});
        auto lists = oracle::colour_lists_naive(g.graph, target.graph);
        std::set<int> images;
        for (auto & m : oracle::odometer_homs(g.graph, target.graph, lists))
            images.insert(m[0] + 1);
        CHECK(images == std::set<int>(shape.begin(), shape.end()));
    }
}

TEST_CASE("h9 reduction agrees with list homomorphism to c6")
{
    mt19937_64 rng{5};
    auto target = build_h9();
    for (int trial = 0; trial < 120; ++trial) {
        int n = uniform_int_distribution<int>{1, 6}(rng);
        auto g = oracle::random_bipartite(rng, n, 0.5, {"x"});
        Graph plain{g.size(), g.edges()};
        auto parts = bipartition(plain);
        vector<vector<int>> lists(n);
        ListAssignment c6_lists;
        for (Vertex v = 0; v < n; ++v) {
            int parity = (parts->side[v] + int(rng() % 2)) % 2;
            for (int label = 1 + parity; label <= 6; label += 2)
                if (rng() % 2)
                    lists[v].push_back(label);
            if (lists[v].empty())
                lists[v].push_back(1 + parity);
            c6_lists.lists.emplace_back();
            for (auto l : lists[v])
                c6_lists.lists.back().push_back(l - 1);
        }
        bool expected = ! oracle::odometer_homs(plain, c6(), c6_lists).empty();
        auto gadget = c6_listhom_to_h9(plain, lists);
        CHECK(oracle::trop_hom_exists(gadget.graph, target.graph) == expected);
    }
}

TEST_CASE("zig-zag paths")
{
    CHECK(zigzag_colours(3) == expand("WBBBBW"));
    CHECK(zigzag_colours(3, 1) == expand("WBBW"));
    CHECK(zigzag_colours(5, 2) == expand("WBBBBWWBBBBW"));
    CHECK(zigzag_colours(4) == expand("WBBBBWWWWB"));
    CHECK(zigzag_colours(4, 2) == expand("WBBBBWWB"));
    CHECK(colours_of(forcing_path(5)) == expand("WBBWWBBW"));
    CHECK_THROWS_AS(zigzag_colours(1), InputError);
    CHECK_THROWS_AS(zigzag_colours(5, 4), InputError);

    // Maps sending the right end to the right end.
    auto rooted = [](const TropicalGraph & a, const TropicalGraph & b, bool right) {
        auto lists = oracle::colour_lists_naive(a, b);
        lists.lists[right ? a.size() - 1 : 0] = {right ? b.size() - 1 : 0};
        return oracle::prefix_hom_exists(a, b, lists);
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(rooted(zigzag_path(5, i), zigzag_path(5, j), true) == (i == j));
    for (int i = 1; i <= 3; ++i)
        CHECK(rooted(zigzag_path(5), zigzag_path(5, i), true));
    for (int j = 1; j <= 2; ++j)
        CHECK(rooted(zigzag_path(4), zigzag_path(4, j), false));
    CHECK(! rooted(zigzag_path(4, 1), zigzag_path(4, 2), false));

    // Unrooted, P_1 is P_3 read backwards.
    auto forward = zigzag_colours(5, 1), backward = zigzag_colours(5, 3);
    std::reverse(backward.begin(), backward.end());
    CHECK(forward == backward);
    CHECK(oracle::trop_hom_exists(zigzag_path(5, 1), zigzag_path(5, 3)));
}

TEST_CASE("zig-zag gadget")
{
    Graph p3{3, {{0, 1}, {1, 2}}};
    auto params = zigzag_parameters(p3);
    CHECK(params.l == 5);
    CHECK(params.k == 4);
    CHECK(params.parts.part_a == vector<Vertex>{0, 2});

    auto h = build_zigzag_gadget(p3);
    CHECK(h.graph.size() == 3 + 2 * 11 + 7);
    for (Vertex v = 0; v < 3; ++v) {
        CHECK(h.graph.colour_name(v) == "White");
        CHECK(h.named("h" + std::to_string(v)) == v);
    }
    CHECK(h.graph.degree(0) == 2);
    CHECK(h.graph.degree(1) == 3);
    CHECK(is_connected(h.graph));
    CHECK(bipartition(h.graph));

    CHECK_THROWS_AS(build_zigzag_gadget(Graph{3, {{0, 1}, {1, 2}, {0, 2}}}), InputError);

    auto empty = zigzag_parameters(Graph{});
    CHECK(empty.l == 3);
    CHECK(empty.k == 2);
}

TEST_CASE("retraction instances")
{
    Graph p3{3, {{0, 1}, {1, 2}}};
    auto same = transform_retraction_instance(p3, p3, {0, 1, 2});
    CHECK(same.host.graph.size() == same.target.graph.size());
    CHECK(same.host.graph.edges() == same.target.graph.edges());
    CHECK(same.copy == VertexMap{[&] {
        VertexMap m(same.target.graph.size());
        for (Vertex v = 0; v < int(m.size()); ++v)
            m[v] = v;
        return m;
    }()});

    // Vertex 4 is on the A side but far from the copy; it still gets a tail.
    Graph g{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
    auto r = transform_retraction_instance(g, p3, {0, 1, 2});
    CHECK(r.host.graph.size() == 5 + (r.target.graph.size() - 3) + 13);
    CHECK(r.host.graph.degree(4) == 2);
    CHECK(r.host.graph.degree(3) == 2);

    CHECK_THROWS_AS(transform_retraction_instance(g, p3, {0, 1, 1}), InputError);
    CHECK_THROWS_AS(transform_retraction_instance(g, p3, {0, 2, 1}), InputError);
    CHECK_THROWS_AS(transform_retraction_instance(g, p3, {0, 1}), InputError);
    CHECK_THROWS_AS(transform_retraction_instance(Graph{4, {{0, 1}, {1, 2}}}, p3, {0, 1, 2}), InputError);
}

TEST_CASE("retraction equivalence on small hosts")
{
    for (auto & h : {Graph{3, {{0, 1}, {1, 2}}}, Graph{4, {{0, 1}, {1, 2}, {2, 3}}}}) {
        int hn = h.size();
        auto white_h = TropicalGraph::monochrome(h, "White");
        VertexMap identity(hn);
        for (Vertex v = 0; v < hn; ++v)
            identity[v] = v;
        auto h_prime = build_zigzag_gadget(h);
        bool core = is_core(h_prime.graph);
        CHECK(core);

        int checked = 0;
        for (int n = hn; n <= 6; ++n) {
            vector<Edge> free_pairs;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (v >= hn)
                        free_pairs.emplace_back(u, v);
            for (unsigned mask = 0; mask < (1u << free_pairs.size()); ++mask) {
                vector<Edge> edges = h.edges();
                for (unsigned i = 0; i < free_pairs.size(); ++i)
                    if ((mask >> i) & 1)
                        edges.push_back(free_pairs[i]);
                Graph g{n, edges};
                if (! is_connected(g) || ! bipartition(g))
                    continue;
                // Retraction by brute force: pin the copy, search the rest.
                auto lists = full_lists(n, hn);
                for (Vertex v = 0; v < hn; ++v)
                    lists.lists[v] = {v};
                bool expected = oracle::prefix_hom_exists(g, h, lists);
                CHECK(solve_retraction(TropicalGraph::monochrome(g, "White"), white_h, identity).solvable()
                    == expected);

                auto r = transform_retraction_instance(g, h, identity);
                CHECK(solve_retraction(r.host.graph, r.target.graph, r.copy).solvable() == expected);
                if (core)
                    CHECK(solve_trop_hom(r.host.graph, r.target.graph).solvable() == expected);
                ++checked;
            }
        }
        CHECK(checked > 10);
    }
}

TEST_CASE("s blocks")
{
    auto s12 = build_s_block(SBlock::S12);
    CHECK(s12.graph.size() == 12);
    CHECK(counts(s12.graph) == map<string, int>{{"Black", 7}, {"BlackCross", 2}, {"RedDot", 2}, {"GreenDot", 1}});

    auto s1t = build_s_block(SBlock::S1T);
    auto s2t = build_s_block(SBlock::S2T);
    CHECK(counts(s2t.graph) == map<string, int>{{"Black", 7}, {"BlackCross", 2}, {"GreenDot", 2}, {"GreenCross", 1}});

    for (auto * b : {&s12, &s1t, &s2t}) {
        CHECK(b->graph.edges().size() == 11);
        CHECK(is_connected(b->graph));
        for (int i = 1; i <= 7; ++i)
            CHECK(b->graph.colour_name(b->named("x" + std::to_string(i))) == "Black");
    }

    // S1T differs from S12 only in the colour of the leaf on x4.
    CHECK(s12.graph.edges() == s1t.graph.edges());
    auto leaf = [](const GadgetGraph & b, int i) {
        for (auto w : b.graph.neighbours(b.named("x" + std::to_string(i))))
            if (b.graph.degree(w) == 1)
                return b.graph.colour_name(w);
        return string{};
    };
    for (int i = 1; i <= 7; ++i) {
        if (i == 4)
            CHECK(leaf(s12, i) != leaf(s1t, i));
        else
            CHECK(leaf(s12, i) == leaf(s1t, i));
    }
    CHECK(leaf(s12, 4) == "GreenDot");
    CHECK(leaf(s1t, 4) == "RedCross");
    CHECK(leaf(s2t, 4) == "GreenCross");
    CHECK(leaf(s2t, 2) == "GreenDot");
    CHECK(leaf(s12, 1) == "BlackCross");
    CHECK(leaf(s12, 3) == "");
}
