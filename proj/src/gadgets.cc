#include <tropical/gadgets.hh>
#include <tropical/errors.hh>

#include <algorithm>
#include <set>

using namespace tropical;

using std::array;
using std::map;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    class GraphBuilder
    {
    private:
        vector<string> _colours;
        vector<Edge> _edges;
        map<string, Vertex> _names;

    public:
        auto add_vertex(const string & colour) -> Vertex
        {
            _colours.push_back(colour);
            return Vertex(_colours.size() - 1);
        }

        auto add_named(const string & label, const string & colour) -> Vertex
        {
            auto v = add_vertex(colour);
            name(label, v);
            return v;
        }

        auto name(const string & label, Vertex v) -> void
        {
            if (! _names.emplace(label, v).second)
                throw InternalError{"label " + label + " used twice"};
        }

        auto add_edge(Vertex u, Vertex v) -> void
        {
            _edges.emplace_back(u, v);
        }

        // Joins from and to through new vertices with the interior colours.
        auto add_path(Vertex from, Vertex to, const vector<string> & colours) -> void
        {
            Vertex previous = from;
            for (std::size_t i = 1; i + 1 < colours.size(); ++i) {
                auto v = add_vertex(colours[i]);
                add_edge(previous, v);
                previous = v;
            }
            add_edge(previous, to);
        }

        auto colour(Vertex v) const -> const string &
        {
            return _colours[v];
        }

        auto size() const -> int
        {
            return int(_colours.size());
        }

        auto finish() const -> GadgetGraph
        {
            return GadgetGraph{TropicalGraph{size(), _edges, _colours}, _names};
        }
    };

    auto check_end(const string & c) -> void
    {
        if (c != "G" && c != "B")
            throw InputError{"path ends must be G or B, not " + c};
    }

    auto recolour(const string & c, Palette palette) -> string
    {
        switch (palette) {
        case Palette::Four: return c;
        case Palette::Three: return c == "R" ? "B" : c;
        case Palette::Two: return c == "Y" ? "White" : "Black";
        }
        throw InternalError{"unknown palette"};
    }

    // Every arc gets its share of the extra Yellow pairs, earliest arcs first.
    auto arc_extras(Palette palette, int k) -> array<int, 6>
    {
        if (k < c48_minimum(palette))
            throw InputError{"cycle needs k at least " + to_string(c48_minimum(palette)) + ", got " + to_string(k)};
        int d = k - c48_minimum(palette);
        array<int, 6> result;
        for (int i = 0; i < 6; ++i)
            result[i] = d / 6 + (i < d % 6 ? 1 : 0);
        return result;
    }

    auto pair_label(int i, int j) -> string
    {
        return "x" + to_string(std::min(i, j)) + "x" + to_string(std::max(i, j));
    }

    auto cycle_label(int i) -> string
    {
        return to_string(i + 1);
    }
}

auto tropical::palette_name(Palette p) -> string
{
    switch (p) {
    case Palette::Four: return "four";
    case Palette::Three: return "three";
    case Palette::Two: return "two";
    }
    throw InternalError{"unknown palette"};
}

auto tropical::parse_palette(const string & name) -> Palette
{
    for (auto p : {Palette::Four, Palette::Three, Palette::Two})
        if (palette_name(p) == name)
            return p;
    throw InputError{"unknown palette " + name};
}

auto GadgetGraph::named(const string & label) const -> Vertex
{
    auto i = names.find(label);
    if (i == names.end())
        throw InputError{"no vertex named " + label};
    return i->second;
}

auto tropical::validate_nae(const NaeFormula & f) -> void
{
    if (f.variables < 0)
        throw InputError{"negative variable count"};
    for (auto & c : f.clauses) {
        for (auto x : c)
            if (x < 0 || x >= f.variables)
                throw InputError{"clause variable " + to_string(x) + " out of range"};
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw InputError{"clause repeats a variable"};
    }
}

auto tropical::validate_cnf(const CnfFormula & f) -> void
{
    if (f.variables < 0)
        throw InputError{"negative variable count"};
    for (auto & c : f.clauses)
        for (auto & l : c)
            if (l.variable < 0 || l.variable >= f.variables)
                throw InputError{"clause variable " + to_string(l.variable) + " out of range"};
}

auto tropical::pq_colours(PathKind kind, const string & start, const string & end, Palette palette, int extra)
    -> vector<string>
{
    check_end(start);
    check_end(end);
    if (kind == PathKind::P && start == end)
        throw InputError{"a P path needs one G end and one B end"};
    if (extra < 0)
        throw InputError{"negative lengthening"};

    vector<string> result{start};
    result.insert(result.end(), 4 + 2 * extra, "Y");
    result.push_back("R");
    if (palette == Palette::Two)
        result.push_back("R");
    result.insert(result.end(), kind == PathKind::P ? 2 : 4 + 2 * extra, "Y");
    result.push_back(end);

    for (auto & c : result)
        c = recolour(c, palette);
    return result;
}

auto tropical::build_pq_path(PathKind kind, const string & start, const string & end, Palette palette, int extra)
    -> GadgetGraph
{
    auto colours = pq_colours(kind, start, end, palette, extra);
    int n = int(colours.size());
    vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return GadgetGraph{TropicalGraph{n, edges, colours}, {{"start", 0}, {"end", n - 1}}};
}

auto tropical::c48_minimum(Palette palette) -> int
{
    return palette == Palette::Two ? 27 : 24;
}

auto tropical::c48_source_extra(Palette palette, int k) -> int
{
    auto e = arc_extras(palette, k);
    return *std::max_element(e.begin(), e.end());
}

auto tropical::build_c48(Palette palette, int k) -> GadgetGraph
{
    auto extras = arc_extras(palette, k);
    const array<string, 6> labels{"g0", "b0", "g1", "b1", "g2", "b2"};

    vector<string> colours;
    map<string, Vertex> names;
    for (int i = 0; i < 6; ++i) {
        string from = i % 2 == 0 ? "G" : "B", to = i % 2 == 0 ? "B" : "G";
        auto arc = pq_colours(PathKind::P, from, to, palette, extras[i]);
        names[labels[i]] = Vertex(colours.size());
        colours.insert(colours.end(), arc.begin(), arc.end() - 1);
    }

    int n = int(colours.size());
    vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return GadgetGraph{TropicalGraph{n, edges, colours}, names};
}

auto tropical::nae3sat_to_c48(const NaeFormula & f, Palette palette, int k) -> GadgetGraph
{
    validate_nae(f);
    int extra = c48_source_extra(palette, k);
    auto g = recolour("G", palette), bl = recolour("B", palette);

    GraphBuilder b;
    // In the two colour palette G and B share a colour, so ends are tracked.
    vector<int> is_green;
    auto add = [&](const string & label, bool green) {
        auto v = b.add_named(label, green ? g : bl);
        is_green.resize(b.size(), 0);
        is_green[v] = green;
        return v;
    };
    auto end_of = [&](Vertex v) -> string { return is_green[v] ? "G" : "B"; };
    auto join = [&](PathKind kind, Vertex from, Vertex to) {
        b.add_path(from, to, pq_colours(kind, end_of(from), end_of(to), palette, extra));
        is_green.resize(b.size(), 0);
    };

    auto ug = add("U_G", true);

    int v = f.variables;
    map<string, Vertex> b1, b2;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            auto label = pair_label(i, j);
            auto b0 = add("b0_" + label, false);
            auto g1 = add("g1_" + label, true);
            auto pb1 = add("b1_" + label, false);
            auto g2 = add("g2_" + label, true);
            auto pb2 = add("b2_" + label, false);
            join(PathKind::P, ug, b0);
            join(PathKind::P, b0, g1);
            join(PathKind::Q, g1, pb1);
            join(PathKind::P, pb1, g2);
            join(PathKind::Q, g2, pb2);
            join(PathKind::Q, pb2, ug);
            b1[label] = pb1;
            b2[label] = pb2;
        }

    for (int p = 0; p < v; ++p)
        for (int q = p + 1; q < v; ++q)
            for (int r = q + 1; r < v; ++r) {
                auto pq = pair_label(p, q), pr = pair_label(p, r), qr = pair_label(q, r);
                auto triple = "x" + to_string(p) + "x" + to_string(q) + "x" + to_string(r);
                const array<array<Vertex, 3>, 3> trees{{{b1[pq], b2[pr], b2[qr]}, {b1[pr], b2[qr], b2[pq]},
                    {b1[qr], b2[pq], b2[pr]}}};
                for (int t = 0; t < 3; ++t) {
                    auto prefix = "t" + to_string(t) + "_";
                    auto g0 = add(prefix + "g0_" + triple, true);
                    auto b0 = add(prefix + "b0_" + triple, false);
                    auto g1 = add(prefix + "g1_" + triple, true);
                    join(PathKind::Q, trees[t][0], g0);
                    join(PathKind::Q, g0, trees[t][1]);
                    join(PathKind::P, g1, b0);
                    join(PathKind::P, b0, g0);
                    join(PathKind::Q, g1, trees[t][2]);
                }
            }

    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        auto & [l1, l2, l3] = f.clauses[c];
        auto prefix = "c" + to_string(c) + "_";
        auto g0 = add(prefix + "g0", true);
        auto b0 = add(prefix + "b0", false);
        auto g1 = add(prefix + "g1", true);
        join(PathKind::P, b1[pair_label(l1, l2)], g0);
        join(PathKind::P, g0, b0);
        join(PathKind::P, b0, g1);
        join(PathKind::Q, g1, b2[pair_label(l2, l3)]);
    }

    auto choose = [](long n, long r) {
        long result = 1;
        for (long i = 0; i < r; ++i)
            result = result * (n - i) / (i + 1);
        return result;
    };
    long pi = long(pq_colours(PathKind::P, "G", "B", palette, extra).size()) - 2;
    long qi = long(pq_colours(PathKind::Q, "G", "B", palette, extra).size()) - 2;
    long expected = 1 + (5 + 3 * pi + 3 * qi) * choose(v, 2) + 3 * (3 + 3 * qi + 2 * pi) * choose(v, 3)
        + (3 + 3 * pi + qi) * long(f.clauses.size());
    if (b.size() != expected)
        throw InternalError{"gadget has " + to_string(b.size()) + " vertices, expected " + to_string(expected)};
    return b.finish();
}

auto tropical::tropicalize_digraph(const Digraph & d) -> TropicalGraph
{
    int n = d.size();
    vector<string> colours(n, "Blue");
    vector<Edge> edges;
    for (auto & [u, v] : d.arcs()) {
        Vertex xu = Vertex(colours.size()), xv = xu + 1;
        colours.push_back("Red");
        colours.push_back("Green");
        edges.emplace_back(u, xu);
        edges.emplace_back(xu, xv);
        edges.emplace_back(xv, v);
    }
    return TropicalGraph{int(colours.size()), edges, colours};
}

auto tropical::build_h9() -> GadgetGraph
{
    GraphBuilder b;
    for (int i = 0; i < 6; ++i)
        b.add_named(cycle_label(i), "Black");
    for (int i = 0; i < 6; ++i)
        b.add_edge(i, (i + 1) % 6);
    b.add_edge(0, b.add_named("red", "Red"));
    b.add_edge(2, b.add_named("green", "Green"));
    b.add_edge(4, b.add_named("yellow", "Yellow"));
    return b.finish();
}

auto tropical::c6_listhom_to_h9(const Graph & source, const vector<vector<int>> & lists) -> GadgetGraph
{
    int n = source.size();
    if (int(lists.size()) != n)
        throw InputError{"expected " + to_string(n) + " lists, got " + to_string(lists.size())};

    GraphBuilder b;
    for (Vertex v = 0; v < n; ++v)
        b.add_named("u" + to_string(v), "Black");
    for (auto & [u, v] : source.edges())
        b.add_edge(u, v);

    // The pendant colour next to cycle labels 1, 3 and 5.
    const map<int, string> pendant{{1, "Red"}, {3, "Green"}, {5, "Yellow"}};

    // A chain of new vertices hanging off u, nearest first.
    auto hang = [&](Vertex u, const vector<string> & colours) {
        Vertex previous = u;
        for (auto & c : colours) {
            auto w = b.add_vertex(c);
            b.add_edge(previous, w);
            previous = w;
        }
    };

    for (Vertex u = 0; u < n; ++u) {
        set<int> l(lists[u].begin(), lists[u].end());
        if (l.empty())
            throw InputError{"vertex " + to_string(u) + " has an empty list"};
        if (l.size() != lists[u].size())
            throw InputError{"vertex " + to_string(u) + " list repeats a label"};
        for (auto x : l)
            if (x < 1 || x > 6)
                throw InputError{"list label " + to_string(x) + " outside 1 to 6"};
        int parity = *l.begin() % 2;
        for (auto x : l)
            if (x % 2 != parity)
                throw InputError{"vertex " + to_string(u) + " list mixes both sides of the cycle"};

        if (l.size() == 1 && parity == 1)
            hang(u, {pendant.at(*l.begin())});
        else if (l.size() == 1) {
            // The two odd neighbours of an even label.
            int x = *l.begin(), a = x - 1, c = x % 6 + 1;
            hang(u, {"Black", pendant.at(a)});
            hang(u, {"Black", pendant.at(c)});
        }
        else if (l.size() == 2 && parity == 0) {
            // The odd label adjacent to both.
            int x = *l.begin(), y = *l.rbegin();
            int common = (y - x == 2) ? x + 1 : 1;
            hang(u, {"Black", pendant.at(common)});
        }
        else if (l.size() == 2) {
            int x = *l.begin(), y = *l.rbegin();
            auto middle = b.add_vertex("Black");
            b.add_edge(u, middle);
            hang(middle, {"Black", pendant.at(x)});
            hang(middle, {"Black", pendant.at(y)});
        }
        else if (parity == 1)
            hang(u, {"Black", "Black", "Red"});
        else
            hang(u, {"Black", "Black", "Black", "Red"});
    }
    return b.finish();
}

auto tropical::zigzag_colours(int runs, int index) -> vector<string>
{
    if (runs < 2)
        throw InputError{"a zig-zag path needs at least two runs"};
    if (index < 0 || index > runs - 2)
        throw InputError{"shortened run " + to_string(index) + " outside 1 to " + to_string(runs - 2)};

    vector<string> result;
    for (int r = 0; r < runs; ++r) {
        int length = (r == 0 || r == runs - 1) ? 1 : (r == index ? 2 : 4);
        result.insert(result.end(), length, r % 2 == 0 ? "White" : "Black");
    }
    return result;
}

auto tropical::zigzag_path(int runs, int index) -> TropicalGraph
{
    auto colours = zigzag_colours(runs, index);
    vector<Edge> edges;
    for (int i = 0; i + 1 < int(colours.size()); ++i)
        edges.emplace_back(i, i + 1);
    return TropicalGraph{int(colours.size()), edges, colours};
}

auto tropical::forcing_path(int runs) -> TropicalGraph
{
    if (runs < 2)
        throw InputError{"a forcing path needs at least two runs"};
    vector<string> colours;
    for (int r = 0; r < runs; ++r)
        colours.insert(colours.end(), (r == 0 || r == runs - 1) ? 1 : 2, r % 2 == 0 ? "White" : "Black");
    vector<Edge> edges;
    for (int i = 0; i + 1 < int(colours.size()); ++i)
        edges.emplace_back(i, i + 1);
    return TropicalGraph{int(colours.size()), edges, colours};
}

auto tropical::zigzag_parameters(const Graph & h) -> ZigzagParameters
{
    auto parts = bipartition(h);
    if (! parts)
        throw InputError{"zig-zag gadget needs a bipartite graph"};
    ZigzagParameters result;
    int a = int(parts->part_a.size()), bs = int(parts->part_b.size());
    result.l = a + 2 + (a % 2 == 0 ? 1 : 0);
    result.k = bs + 2 + (bs % 2 == 1 ? 1 : 0);
    result.parts = *parts;
    return result;
}

namespace
{
    // Grows the P_i and Q_j paths on the vertices at[v] of b, for v in h.
    auto grow_zigzag(GraphBuilder & b, const ZigzagParameters & params, const VertexMap & at) -> void
    {
        auto & parts = params.parts;
        for (std::size_t i = 0; i < parts.part_a.size(); ++i) {
            auto colours = zigzag_colours(params.l, int(i) + 1);
            // Built from the far end so the anchor is the right end.
            Vertex previous = at[parts.part_a[i]];
            for (int c = int(colours.size()) - 2; c >= 0; --c) {
                auto w = b.add_vertex(colours[c]);
                b.add_edge(previous, w);
                previous = w;
            }
        }
        for (std::size_t j = 0; j < parts.part_b.size(); ++j) {
            auto colours = zigzag_colours(params.k, int(j) + 1);
            Vertex previous = at[parts.part_b[j]];
            for (std::size_t c = 1; c < colours.size(); ++c) {
                auto w = b.add_vertex(colours[c]);
                b.add_edge(previous, w);
                previous = w;
            }
        }
    }
}

auto tropical::build_zigzag_gadget(const Graph & h) -> GadgetGraph
{
    auto params = zigzag_parameters(h);
    GraphBuilder b;
    VertexMap at(h.size());
    for (Vertex v = 0; v < h.size(); ++v)
        at[v] = b.add_named("h" + to_string(v), "White");
    for (auto & [u, v] : h.edges())
        b.add_edge(u, v);
    grow_zigzag(b, params, at);
    return b.finish();
}

auto tropical::transform_retraction_instance(const Graph & g, const Graph & h, const VertexMap & copy)
    -> RetractionInstance
{
    if (int(copy.size()) != h.size())
        throw InputError{"copy has " + to_string(copy.size()) + " entries for " + to_string(h.size()) + " vertices"};
    if (! is_connected(g))
        throw InputError{"host graph is not connected"};
    auto host_parts = bipartition(g);
    if (! host_parts)
        throw InputError{"host graph is not bipartite"};
    set<Vertex> used;
    for (auto v : copy) {
        if (v < 0 || v >= g.size())
            throw InputError{"copy vertex " + to_string(v) + " out of range"};
        if (! used.insert(v).second)
            throw InputError{"copy is not injective"};
    }
    if (! validate_graph_hom(h, g, copy))
        throw InputError{"copy is not a homomorphism"};

    auto params = zigzag_parameters(h);
    int a_side = params.parts.part_a.empty() ? 0 : host_parts->side[copy[params.parts.part_a[0]]];
    for (Vertex v = 0; v < h.size(); ++v)
        if ((host_parts->side[copy[v]] == a_side) != (params.parts.side[v] == 0))
            throw InputError{"copy does not respect the sides of h"};

    auto target = build_zigzag_gadget(h);

    GraphBuilder b;
    for (Vertex v = 0; v < g.size(); ++v)
        b.add_named("g" + to_string(v), "White");
    for (auto & [u, v] : g.edges())
        b.add_edge(u, v);
    grow_zigzag(b, params, copy);

    auto p = zigzag_colours(params.l);
    for (Vertex v = 0; v < g.size(); ++v)
        if (host_parts->side[v] == a_side && ! used.count(v)) {
            Vertex previous = v;
            for (int c = int(p.size()) - 2; c >= 0; --c) {
                auto w = b.add_vertex(p[c]);
                b.add_edge(previous, w);
                previous = w;
            }
        }

    RetractionInstance result{b.finish(), target, VertexMap(target.graph.size())};
    for (Vertex x = 0; x < target.graph.size(); ++x)
        result.copy[x] = x < h.size() ? copy[x] : g.size() + (x - h.size());
    return result;
}

auto tropical::parse_s_block(const string & name) -> SBlock
{
    if (name == "S12")
        return SBlock::S12;
    if (name == "S1T")
        return SBlock::S1T;
    if (name == "S2T")
        return SBlock::S2T;
    throw InputError{"unknown block " + name};
}

auto tropical::build_s_block(SBlock kind) -> GadgetGraph
{
    string side = kind == SBlock::S2T ? "GreenDot" : "RedDot";
    string centre = kind == SBlock::S12 ? "GreenDot" : kind == SBlock::S1T ? "RedCross" : "GreenCross";

    GraphBuilder b;
    for (int i = 1; i <= 7; ++i)
        b.add_named("x" + to_string(i), "Black");
    for (int i = 0; i < 6; ++i)
        b.add_edge(i, i + 1);
    for (auto & [x, colour] : vector<std::pair<int, string>>{
             {1, "BlackCross"}, {2, side}, {4, centre}, {6, side}, {7, "BlackCross"}})
        b.add_edge(x - 1, b.add_vertex(colour));
    return b.finish();
}
