#include <tropical/poly.hh>
#include <tropical/core.hh>
#include <tropical/two_sat.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

using namespace tropical;

using std::deque;
using std::nullopt;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto contains(const vector<Vertex> & v, Vertex x) -> bool
    {
        return std::find(v.begin(), v.end(), x) != v.end();
    }

    auto normalised(Vertex u, Vertex v) -> Edge
    {
        return u < v ? Edge{u, v} : Edge{v, u};
    }

    auto add_stats(SolveStats & into, const SolveStats & from) -> void
    {
        into.nodes += from.nodes;
        into.propagations += from.propagations;
    }

    auto unsolvable(SolveStats stats = {}) -> SolveOutcome
    {
        return SolveOutcome{SolveStatus::Unsolvable, nullopt, stats};
    }

    auto solvable(VertexMap witness, SolveStats stats = {}) -> SolveOutcome
    {
        return SolveOutcome{SolveStatus::Solvable, std::move(witness), stats};
    }

    auto check_witness(const TropicalGraph & source, const TropicalGraph & target, const SolveOutcome & out,
        const char * who) -> void
    {
        if (out.witness && ! validate_hom(source, target, *out.witness))
            throw InternalError{string{who} + " produced a map that is not a homomorphism"};
    }

    // Tries each target component for each source component, lifting the first
    // success. solve_one sees component graphs and answers in component indices.
    template <typename Solve_>
    auto solve_by_components(const TropicalGraph & source, const TropicalGraph & target, Solve_ && solve_one)
        -> SolveOutcome
    {
        auto source_components = connected_components(source);
        auto target_components = connected_components(target);
        VertexMap witness(source.size(), -1);
        SolveStats stats;
        for (auto & sc : source_components) {
            bool found = false;
            for (size_t j = 0; j < target_components.size() && ! found; ++j) {
                auto out = solve_one(sc.graph, j, target_components[j].graph);
                add_stats(stats, out.stats);
                if (out.solvable()) {
                    for (int i = 0; i < sc.graph.size(); ++i)
                        witness[sc.vertices[i]] = target_components[j].vertices[(*out.witness)[i]];
                    found = true;
                }
            }
            if (! found)
                return unsolvable(stats);
        }
        return solvable(std::move(witness), stats);
    }

    // Pair sets are the colour classes; each source vertex takes its colour's class.
    auto solve_by_colour_classes(const TropicalGraph & source, const TropicalGraph & target,
        const vector<vector<Vertex>> & classes) -> SolveOutcome
    {
        vector<int> assign(source.size());
        for (Vertex v = 0; v < source.size(); ++v) {
            auto id = target.colour_id(source.colour_name(v));
            if (! id)
                return unsolvable();
            assign[v] = *id;
        }
        return solve_via_pairs(source, target, classes, assign);
    }
}

auto FeatureSet::empty() const -> bool
{
    return type1.empty() && type2.empty() && type3.empty() && type4.empty();
}

auto FeatureSet::size() const -> size_t
{
    return type1.size() + type2.size() + type3.size() + type4.size();
}

auto tropical::is_forcing(const TropicalGraph & g, Vertex v) -> bool
{
    set<int> seen;
    for (auto w : g.neighbours(v))
        if (! seen.insert(g.colour(w)).second)
            return false;
    return true;
}

auto tropical::forcing_vertices(const TropicalGraph & g) -> vector<Vertex>
{
    vector<Vertex> result;
    for (Vertex v = 0; v < g.size(); ++v)
        if (is_forcing(g, v))
            result.push_back(v);
    return result;
}

auto tropical::solve_all_forcing(const TropicalGraph & source, const TropicalGraph & target) -> SolveOutcome
{
    int palette = int(target.palette().size());
    vector<vector<Vertex>> by_colour(target.size(), vector<Vertex>(palette, -1));
    for (Vertex t = 0; t < target.size(); ++t) {
        if (! is_forcing(target, t))
            throw PreconditionError{"target vertex " + to_string(t) + " is not forcing"};
        for (auto w : target.neighbours(t))
            by_colour[t][target.colour(w)] = w;
    }

    vector<int> colour(source.size());
    for (Vertex v = 0; v < source.size(); ++v) {
        auto id = target.colour_id(source.colour_name(v));
        if (! id)
            return unsolvable();
        colour[v] = *id;
    }

    SolveStats stats;
    VertexMap f(source.size(), -1);
    for (auto & component : connected_components(source)) {
        Vertex anchor = component.vertices.front();
        bool done = false;
        for (Vertex t = 0; t < target.size() && ! done; ++t) {
            if (target.colour(t) != colour[anchor])
                continue;
            ++stats.nodes;
            for (auto v : component.vertices)
                f[v] = -1;
            f[anchor] = t;
            deque<Vertex> todo{anchor};
            bool ok = true;
            while (ok && ! todo.empty()) {
                auto x = todo.front();
                todo.pop_front();
                ++stats.propagations;
                for (auto y : source.neighbours(x)) {
                    auto image = by_colour[f[x]][colour[y]];
                    if (image == -1 || (f[y] != -1 && f[y] != image)) {
                        ok = false;
                        break;
                    }
                    if (f[y] == -1) {
                        f[y] = image;
                        todo.push_back(y);
                    }
                }
            }
            done = ok;
        }
        if (! done)
            return unsolvable(stats);
    }

    auto out = solvable(std::move(f), stats);
    check_witness(source, target, out, "forcing propagation");
    return out;
}

auto tropical::solve_via_pairs(const TropicalGraph & source, const TropicalGraph & target,
    const vector<vector<Vertex>> & pair_sets, const vector<int> & assign) -> SolveOutcome
{
    for (size_t i = 0; i < pair_sets.size(); ++i) {
        auto & p = pair_sets[i];
        if (p.empty() || p.size() > 2)
            throw PreconditionError{"pair set " + to_string(i) + " must have one or two vertices"};
        for (auto t : p)
            if (t < 0 || t >= target.size())
                throw PreconditionError{"pair set " + to_string(i) + " names a vertex out of range"};
        if (p.size() == 2 && (p[0] == p[1] || target.adjacent(p[0], p[1])))
            throw PreconditionError{"pair set " + to_string(i) + " is not independent"};
    }
    if (int(assign.size()) != source.size())
        throw PreconditionError{"pair assignment must cover every source vertex"};
    for (auto a : assign)
        if (a < 0 || a >= int(pair_sets.size()))
            throw PreconditionError{"pair assignment names a set out of range"};

    // Variable v true picks the first member of its set, false the second.
    auto option = [&](Vertex v, bool first) -> Vertex {
        auto & p = pair_sets[assign[v]];
        return first ? p[0] : (p.size() == 2 ? p[1] : -1);
    };

    TwoSatFormula formula{source.size(), {}};
    for (Vertex v = 0; v < source.size(); ++v)
        for (bool b : {true, false}) {
            auto t = option(v, b);
            if (t == -1 || target.colour_name(t) != source.colour_name(v))
                formula.clauses.push_back({Literal{v, ! b}, Literal{v, ! b}});
        }
    for (auto & [x, y] : source.edges())
        for (bool bx : {true, false})
            for (bool by : {true, false}) {
                auto tx = option(x, bx), ty = option(y, by);
                if (tx == -1 || ty == -1 || ! target.adjacent(tx, ty))
                    formula.clauses.push_back({Literal{x, ! bx}, Literal{y, ! by}});
            }

    auto assignment = solve_2sat(formula);
    if (! assignment)
        return unsolvable();

    VertexMap f(source.size());
    for (Vertex v = 0; v < source.size(); ++v)
        f[v] = option(v, (*assignment)[v]);
    auto out = solvable(std::move(f));
    check_witness(source, target, out, "pair system");
    return out;
}

auto tropical::colour_class_pairs(const TropicalGraph & target) -> optional<vector<vector<Vertex>>>
{
    vector<vector<Vertex>> classes(target.palette().size());
    for (Vertex v = 0; v < target.size(); ++v)
        classes[target.colour(v)].push_back(v);
    for (auto & c : classes)
        if (c.size() > 2 || (c.size() == 2 && target.adjacent(c[0], c[1])))
            return nullopt;
    return classes;
}

auto tropical::solve_colour_pairs(const TropicalGraph & source, const TropicalGraph & target) -> SolveOutcome
{
    struct Prepared
    {
        bool bipartite;
        TropicalGraph graph;
        vector<vector<Vertex>> classes;
    };

    vector<Prepared> prepared;
    for (auto & tc : connected_components(target)) {
        bool bip = bool(bipartition(tc.graph));
        auto graph = bip ? split_colours(tc.graph) : tc.graph;
        auto classes = colour_class_pairs(graph);
        if (! classes)
            throw PreconditionError{"some colour class has more than two vertices or is not independent"};
        prepared.push_back(Prepared{bip, std::move(graph), std::move(*classes)});
    }

    auto out = solve_by_components(source, target, [&](const TropicalGraph & sc, size_t j, const TropicalGraph &) {
        auto & p = prepared[j];
        if (! p.bipartite)
            return solve_by_colour_classes(sc, p.graph, p.classes);
        if (! bipartition(sc))
            return unsolvable();
        auto [first, second] = split_instance(sc);
        auto a = solve_by_colour_classes(first, p.graph, p.classes);
        if (a.solvable())
            return a;
        return solve_by_colour_classes(second, p.graph, p.classes);
    });
    check_witness(source, target, out, "pair rule");
    return out;
}

auto tropical::is_type1(const TropicalGraph & h, Vertex u) -> bool
{
    for (Vertex v = 0; v < h.size(); ++v)
        if (v != u && h.colour(v) == h.colour(u))
            return false;
    return true;
}

auto tropical::is_type2(const TropicalGraph & h, const Edge & e) -> bool
{
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= h.size() || v >= h.size() || u == v || ! h.adjacent(u, v))
        return false;
    if (h.colour(u) == h.colour(v))
        return false;
    auto key = normalised(h.colour(u), h.colour(v));
    int count = 0;
    for (auto & [a, b] : h.edges())
        if (normalised(h.colour(a), h.colour(b)) == key)
            ++count;
    return count == 1;
}

auto tropical::is_type3(const TropicalGraph & h, Vertex u) -> bool
{
    if (h.degree(u) == 0)
        return false;
    int s = h.colour(h.neighbours(u)[0]);
    if (s == h.colour(u))
        return false;
    for (auto w : h.neighbours(u))
        if (h.colour(w) != s)
            return false;
    for (Vertex x = 0; x < h.size(); ++x) {
        if (h.colour(x) != s || h.adjacent(u, x))
            continue;
        for (auto y : h.neighbours(x))
            if (h.colour(y) == h.colour(u))
                return false;
    }
    return true;
}

auto tropical::is_type4(const TropicalGraph & h, Vertex u) -> bool
{
    if (h.degree(u) < 2 || ! is_forcing(h, u))
        return false;
    for (auto v : h.neighbours(u))
        if (h.colour(v) == h.colour(u))
            return false;

    // Some other vertex of u's colour seeing two of u's neighbour colours, away
    // from u, would give the forbidden path.
    set<int> around;
    for (auto v : h.neighbours(u))
        around.insert(h.colour(v));
    for (Vertex m = 0; m < h.size(); ++m) {
        if (m == u || h.colour(m) != h.colour(u))
            continue;
        set<int> seen;
        for (auto x : h.neighbours(m))
            if (x != u && around.count(h.colour(x)))
                seen.insert(h.colour(x));
        if (seen.size() >= 2)
            return false;
    }
    return true;
}

auto tropical::detect_features(const TropicalGraph & target) -> FeatureSet
{
    FeatureSet result;
    for (Vertex u = 0; u < target.size(); ++u) {
        if (is_type1(target, u))
            result.type1.push_back(u);
        if (is_type3(target, u))
            result.type3.push_back(u);
        if (is_type4(target, u))
            result.type4.push_back(u);
    }
    for (auto & e : target.edges())
        if (is_type2(target, e))
            result.type2.push_back(e);
    return result;
}

auto tropical::non_adjacent_subset(const Graph & h, const vector<Vertex> & vertices) -> vector<Vertex>
{
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    vector<Vertex> result;
    for (auto v : sorted)
        if (std::none_of(result.begin(), result.end(), [&](Vertex w) { return w == v || h.adjacent(v, w); }))
            result.push_back(v);
    return result;
}

namespace
{
    auto check_feature_set(const TropicalGraph & h, const FeatureSet & s) -> void
    {
        for (auto u : s.type1)
            if (u < 0 || u >= h.size() || ! is_type1(h, u))
                throw PreconditionError{"vertex " + to_string(u) + " is not a type 1 feature"};
        for (auto & e : s.type2)
            if (! is_type2(h, e))
                throw PreconditionError{"edge (" + to_string(e.first) + ", " + to_string(e.second) + ") is not a type 2 feature"};
        for (auto u : s.type3)
            if (u < 0 || u >= h.size() || ! is_type3(h, u))
                throw PreconditionError{"vertex " + to_string(u) + " is not a type 3 feature"};
        for (auto u : s.type4)
            if (u < 0 || u >= h.size() || ! is_type4(h, u))
                throw PreconditionError{"vertex " + to_string(u) + " is not a type 4 feature"};
        for (auto u : s.type4)
            for (auto v : s.type4)
                if (u != v && h.adjacent(u, v))
                    throw PreconditionError{"type 4 features " + to_string(u) + " and " + to_string(v) + " are adjacent"};
    }

    auto sorted_unique(vector<Vertex> v) -> vector<Vertex>
    {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }
}

auto tropical::feature_graph(const TropicalGraph & target, const FeatureSet & s) -> FeatureGraph
{
    auto type4 = sorted_unique(s.type4);
    vector<char> removed(target.size(), 0);
    for (auto u : s.type1)
        removed[u] = 1;
    for (auto u : s.type3)
        removed[u] = 1;
    for (auto u : type4)
        removed[u] = 1;

    set<Edge> dropped;
    for (auto [u, v] : s.type2)
        dropped.insert(normalised(u, v));

    FeatureGraph result;
    vector<Vertex> index(target.size(), -1);
    vector<string> colours;
    for (Vertex v = 0; v < target.size(); ++v)
        if (! removed[v]) {
            index[v] = int(result.origin.size());
            result.origin.push_back(v);
            colours.push_back(target.colour_name(v));
        }

    vector<Edge> edges;
    for (auto & e : target.edges())
        if (index[e.first] != -1 && index[e.second] != -1 && ! dropped.count(e))
            edges.emplace_back(index[e.first], index[e.second]);

    for (auto u : type4)
        for (auto v : target.neighbours(u)) {
            if (index[v] == -1)
                continue;
            edges.emplace_back(int(result.origin.size()), index[v]);
            result.origin.push_back(u);
            colours.push_back(target.colour_name(u));
        }

    result.graph = TropicalGraph{int(result.origin.size()), std::move(edges), colours};
    return result;
}

auto tropical::reduce_by_features(const TropicalGraph & source, const TropicalGraph & target, const FeatureSet & s)
    -> optional<ReducedInstance>
{
    check_feature_set(target, s);

    int n = source.size();
    auto lists = colour_lists(source, target).lists;
    vector<char> alive(n, 1);
    VertexMap forced(n, -1);

    // Edges still present in the source; an edge is consumed when one end is
    // eliminated or it is matched to a type 2 feature.
    set<Edge> edges(source.edges().begin(), source.edges().end());

    auto narrow = [&](Vertex v, const vector<Vertex> & allowed) -> bool {
        auto & l = lists[v];
        l.erase(std::remove_if(l.begin(), l.end(), [&](Vertex t) { return ! contains(allowed, t); }), l.end());
        return ! l.empty();
    };

    auto neighbours_of = [&](Vertex t) {
        return vector<Vertex>(target.neighbours(t).begin(), target.neighbours(t).end());
    };

    // Pins v to t, narrows its live neighbours to N(t) and deletes v.
    auto eliminate = [&](Vertex v, Vertex t) -> bool {
        if (! contains(lists[v], t))
            return false;
        forced[v] = t;
        alive[v] = 0;
        auto around = neighbours_of(t);
        for (auto w : source.neighbours(v)) {
            auto e = normalised(v, w);
            if (! edges.count(e))
                continue;
            edges.erase(e);
            if (! narrow(w, around))
                return false;
        }
        return true;
    };

    for (auto u : sorted_unique(s.type1))
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && source.colour_name(v) == target.colour_name(u))
                if (! eliminate(v, u))
                    return nullopt;

    auto type2 = s.type2;
    for (auto & e : type2)
        e = normalised(e.first, e.second);
    std::sort(type2.begin(), type2.end());
    for (auto [a, b] : type2) {
        auto ca = target.colour_name(a), cb = target.colour_name(b);
        for (auto it = edges.begin(); it != edges.end();) {
            auto [x, y] = *it;
            optional<pair<Vertex, Vertex>> pins;
            if (source.colour_name(x) == ca && source.colour_name(y) == cb)
                pins = pair{a, b};
            else if (source.colour_name(x) == cb && source.colour_name(y) == ca)
                pins = pair{b, a};
            if (! pins) {
                ++it;
                continue;
            }
            if (! narrow(x, {pins->first}) || ! narrow(y, {pins->second}))
                return nullopt;
            it = edges.erase(it);
        }
    }

    for (auto u : sorted_unique(s.type3)) {
        auto s_colour = target.colour_name(target.neighbours(u)[0]);
        for (Vertex v = 0; v < n; ++v) {
            if (! alive[v] || source.colour_name(v) != target.colour_name(u) || ! contains(lists[v], u))
                continue;
            bool monochromatic = true;
            for (auto w : source.neighbours(v))
                if (edges.count(normalised(v, w)) && source.colour_name(w) != s_colour)
                    monochromatic = false;
            if (monochromatic && ! eliminate(v, u))
                return nullopt;
        }
    }

    auto type4 = sorted_unique(s.type4);
    for (auto u : type4) {
        set<string> around;
        for (auto v : target.neighbours(u))
            around.insert(target.colour_name(v));
        for (Vertex x = 0; x < n; ++x) {
            if (! alive[x] || source.colour_name(x) != target.colour_name(u))
                continue;
            set<string> seen;
            for (auto w : source.neighbours(x))
                if (around.count(source.colour_name(w)))
                    seen.insert(source.colour_name(w));
            if (seen.size() >= 2 && ! eliminate(x, u))
                return nullopt;
        }
    }

    ReducedInstance result;
    result.target = feature_graph(target, s);
    result.forced = std::move(forced);

    // Target indices to H(S) indices; a type 4 vertex stands for its pendants.
    vector<vector<Vertex>> images(target.size());
    for (int i = 0; i < result.target.graph.size(); ++i)
        images[result.target.origin[i]].push_back(i);
    for (auto u : s.type1)
        images[u].clear();
    for (auto u : s.type3)
        images[u].clear();

    vector<Vertex> index(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) {
            index[v] = int(result.source_origin.size());
            result.source_origin.push_back(v);
            vector<Vertex> list;
            for (auto t : lists[v])
                for (auto i : images[t])
                    list.push_back(i);
            std::sort(list.begin(), list.end());
            if (list.empty())
                return nullopt;
            result.lists.lists.push_back(std::move(list));
        }

    vector<Edge> remaining;
    for (auto & [x, y] : edges)
        if (alive[x] && alive[y])
            remaining.emplace_back(index[x], index[y]);
    result.source = Graph{int(result.source_origin.size()), std::move(remaining)};
    return result;
}

auto tropical::lift_witness(const ReducedInstance & r, const VertexMap & reduced_witness) -> VertexMap
{
    VertexMap f = r.forced;
    for (size_t i = 0; i < r.source_origin.size(); ++i)
        f[r.source_origin[i]] = r.target.origin[reduced_witness[i]];
    return f;
}

auto tropical::solve_by_features(const TropicalGraph & source, const TropicalGraph & target, const FeatureSet & s)
    -> SolveOutcome
{
    auto reduced = reduce_by_features(source, target, s);
    if (! reduced)
        return unsolvable();
    auto out = solve_list_hom(reduced->source, reduced->target.graph, reduced->lists);
    if (out.solvable())
        out.witness = lift_witness(*reduced, *out.witness);
    check_witness(source, target, out, "feature reduction");
    return out;
}

namespace
{
    auto has_g1(const Graph & tree) -> bool
    {
        for (Vertex centre = 0; centre < tree.size(); ++centre) {
            int long_legs = 0;
            for (auto first : tree.neighbours(centre)) {
                // depth of the branch through first, measured from centre
                vector<int> depth(tree.size(), -1);
                depth[centre] = 0;
                depth[first] = 1;
                vector<Vertex> stack{first};
                int deepest = 1;
                while (! stack.empty()) {
                    auto v = stack.back();
                    stack.pop_back();
                    for (auto w : tree.neighbours(v))
                        if (depth[w] == -1) {
                            depth[w] = depth[v] + 1;
                            deepest = std::max(deepest, depth[w]);
                            stack.push_back(w);
                        }
                }
                if (deepest >= 3)
                    ++long_legs;
            }
            if (long_legs >= 3)
                return true;
        }
        return false;
    }

    auto is_cycle(const TropicalGraph & g) -> bool
    {
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.degree(v) != 2)
                return false;
        return is_connected(g);
    }

    auto has_induced_cycle(const TropicalGraph & g, int length) -> bool
    {
        int n = g.size();
        if (n < length)
            return false;
        vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + length, 1);
        do {
            vector<Vertex> keep;
            for (Vertex v = 0; v < n; ++v)
                if (pick[v])
                    keep.push_back(v);
            if (is_cycle(induced_subgraph(g, keep)))
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return false;
    }
}

auto tropical::list_hom_certified(const Graph & h) -> bool
{
    auto plain = TropicalGraph::monochrome(h, "X");
    for (auto & c : connected_components(plain)) {
        auto & g = c.graph;
        if (! bipartition(g))
            return false;
        if (int(g.edges().size()) == g.size() - 1) {
            if (has_g1(g))
                return false;
        }
        else if (g.size() > 8 || has_induced_cycle(g, 6) || has_induced_cycle(g, 8))
            return false;
    }
    return true;
}

auto tropical::step_name(Step s) -> string
{
    switch (s) {
        case Step::CoreReduced: return "CoreReduced";
        case Step::SplitColours: return "SplitColours";
        case Step::AllForcing: return "AllForcing";
        case Step::TwoSat: return "TwoSat";
        case Step::UniqueFeature: return "UniqueFeature";
        case Step::ExactFallback: return "ExactFallback";
    }
    throw InternalError{"unknown step"};
}

auto StrategyReport::uses(Step s) const -> bool
{
    return std::find(route.begin(), route.end(), s) != route.end();
}

namespace
{
    struct ComponentPlan
    {
        Component component;
        bool bipartite = false;

        // The graph actually solved against, after core reduction and colour
        // splitting, and where its vertices sit in the component.
        TropicalGraph work;
        vector<Vertex> work_to_component;

        bool split = false;
        Step method = Step::ExactFallback;
        FeatureSet features;
        vector<vector<Vertex>> classes;
        vector<Step> steps;
        vector<string> notes;
    };

    auto describe(const FeatureSet & s) -> string
    {
        if (s.empty())
            return "empty feature set";
        string kind = ! s.type1.empty() ? "type 1" : ! s.type2.empty() ? "type 2" : ! s.type3.empty() ? "type 3" : "type 4";
        return to_string(s.size()) + " " + kind + " features";
    }

    auto plan_component(Component component, int index, const DispatchOptions & options) -> ComponentPlan
    {
        ComponentPlan p;
        p.component = std::move(component);
        auto & g = p.component.graph;
        auto tag = "component " + to_string(index) + ": ";
        p.bipartite = bool(bipartition(g));

        p.work = g;
        p.work_to_component.resize(g.size());
        std::iota(p.work_to_component.begin(), p.work_to_component.end(), 0);

        if (g.size() <= options.core_limit) {
            auto c = core(g);
            if (c.core.size() < g.size()) {
                p.steps.push_back(Step::CoreReduced);
                p.notes.push_back(tag + "core has " + to_string(c.core.size()) + " of " + to_string(g.size()) + " vertices");
                p.work = std::move(c.core);
                p.work_to_component = std::move(c.vertices);
            }
        }

        if (p.bipartite) {
            p.split = true;
            p.work = split_colours(p.work);
            p.steps.push_back(Step::SplitColours);
            p.notes.push_back(tag + "colours split by side");
        }

        if (forcing_vertices(p.work).size() == size_t(p.work.size())) {
            p.method = Step::AllForcing;
            p.notes.push_back(tag + "every vertex is forcing");
        }
        else if (auto classes = colour_class_pairs(p.work)) {
            p.method = Step::TwoSat;
            p.classes = std::move(*classes);
            p.notes.push_back(tag + "colour classes are independent pairs");
        }
        else {
            auto all = detect_features(p.work);
            vector<FeatureSet> candidates{FeatureSet{}};
            if (! all.type1.empty()) candidates.push_back(FeatureSet{all.type1, {}, {}, {}});
            if (! all.type2.empty()) candidates.push_back(FeatureSet{{}, all.type2, {}, {}});
            if (! all.type3.empty()) candidates.push_back(FeatureSet{{}, {}, all.type3, {}});
            if (! all.type4.empty()) candidates.push_back(FeatureSet{{}, {}, {}, non_adjacent_subset(p.work, all.type4)});
            for (auto & s : candidates)
                if (list_hom_certified(feature_graph(p.work, s).graph)) {
                    p.method = Step::UniqueFeature;
                    p.features = s;
                    p.notes.push_back(tag + describe(s) + " leave a tractable list problem");
                    break;
                }
            if (p.method != Step::UniqueFeature) {
                if (! options.allow_fallback)
                    throw PreconditionError{"no polynomial route applies to target " + tag.substr(0, tag.size() - 2)};
                p.notes.push_back(tag + "no polynomial route, exact search");
            }
        }
        p.steps.push_back(p.method);
        return p;
    }

    auto solve_with(const ComponentPlan & p, const TropicalGraph & source) -> SolveOutcome
    {
        switch (p.method) {
            case Step::AllForcing: return solve_all_forcing(source, p.work);
            case Step::TwoSat: return solve_by_colour_classes(source, p.work, p.classes);
            case Step::UniqueFeature: return solve_by_features(source, p.work, p.features);
            default: return solve_trop_hom(source, p.work);
        }
    }

    auto solve_on_plan(const ComponentPlan & p, const TropicalGraph & source) -> SolveOutcome
    {
        // An odd cycle has nowhere to go in a bipartite target.
        if (p.bipartite && ! bipartition(source))
            return unsolvable();
        if (! p.split)
            return solve_with(p, source);
        auto [first, second] = split_instance(source);
        auto a = solve_with(p, first);
        if (a.solvable())
            return a;
        auto b = solve_with(p, second);
        add_stats(b.stats, a.stats);
        return b;
    }

    auto merge_routes(const vector<ComponentPlan> & plans) -> StrategyReport
    {
        StrategyReport report;
        set<Step> used;
        for (auto & p : plans) {
            used.insert(p.steps.begin(), p.steps.end());
            report.notes.insert(report.notes.end(), p.notes.begin(), p.notes.end());
        }
        if (plans.empty()) {
            used.insert(Step::AllForcing);
            report.notes.push_back("empty target: every vertex is vacuously forcing");
        }
        report.route.assign(used.begin(), used.end());
        return report;
    }

    auto plan_target(const TropicalGraph & target, const DispatchOptions & options) -> vector<ComponentPlan>
    {
        vector<ComponentPlan> plans;
        int index = 0;
        for (auto & c : connected_components(target))
            plans.push_back(plan_component(std::move(c), index++, options));
        return plans;
    }
}

auto tropical::analyze_target(const TropicalGraph & target, const DispatchOptions & options) -> StrategyReport
{
    return merge_routes(plan_target(target, options));
}

auto tropical::dispatch_solve(const TropicalGraph & source, const TropicalGraph & target,
    const DispatchOptions & options) -> pair<SolveOutcome, StrategyReport>
{
    auto plans = plan_target(target, options);
    auto report = merge_routes(plans);

    auto out = solve_by_components(source, target, [&](const TropicalGraph & sc, size_t j, const TropicalGraph &) {
        auto & p = plans[j];
        auto result = solve_on_plan(p, sc);
        if (result.solvable())
            for (auto & x : *result.witness)
                x = p.work_to_component[x];
        return result;
    });
    check_witness(source, target, out, "dispatch");
    return {std::move(out), std::move(report)};
}
