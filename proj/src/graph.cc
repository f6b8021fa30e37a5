#include <tropical/graph.hh>

#include <algorithm>
#include <map>
#include <queue>

using namespace tropical;

using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::queue;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto check_endpoints(int size, const Edge & e, const char * what) -> void
    {
        if (e.first < 0 || e.first >= size || e.second < 0 || e.second >= size)
            throw InputError{string{what} + " (" + to_string(e.first) + ", " + to_string(e.second) + ") out of range"};
        if (e.first == e.second)
            throw InputError{"loop at vertex " + to_string(e.first)};
    }

    auto check_map(int source_size, int target_size, const VertexMap & map) -> void
    {
        if (int(map.size()) != source_size)
            throw InputError{"map has " + to_string(map.size()) + " entries for " + to_string(source_size) + " vertices"};
        for (Vertex v = 0; v < source_size; ++v)
            if (map[v] < 0 || map[v] >= target_size)
                throw InputError{"image of vertex " + to_string(v) + " out of range"};
    }
}

Graph::Graph(int size, vector<Edge> edges) :
    _size(size),
    _edges(std::move(edges)),
    _adjacency(size < 0 ? 0 : size)
{
    if (size < 0)
        throw InputError{"negative vertex count"};

    for (auto & e : _edges) {
        check_endpoints(size, e, "edge");
        if (e.first > e.second)
            std::swap(e.first, e.second);
    }

    std::sort(_edges.begin(), _edges.end());
    auto dup = std::adjacent_find(_edges.begin(), _edges.end());
    if (dup != _edges.end())
        throw InputError{"duplicate edge (" + to_string(dup->first) + ", " + to_string(dup->second) + ")"};

    for (auto & [u, v] : _edges) {
        _adjacency[u].push_back(v);
        _adjacency[v].push_back(u);
    }
    for (auto & a : _adjacency)
        std::sort(a.begin(), a.end());
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    return std::binary_search(_adjacency[u].begin(), _adjacency[u].end(), v);
}

TropicalGraph::TropicalGraph(int size, vector<Edge> edges, const vector<string> & colours) :
    Graph(size, std::move(edges))
{
    if (int(colours.size()) != size)
        throw InputError{"colour map has " + to_string(colours.size()) + " entries for " + to_string(size) + " vertices"};

    map<string, int> ids;
    for (auto & c : colours) {
        auto [it, inserted] = ids.emplace(c, int(_palette.size()));
        if (inserted)
            _palette.push_back(c);
        _colour.push_back(it->second);
    }
}

auto TropicalGraph::monochrome(const Graph & g, const string & colour) -> TropicalGraph
{
    return TropicalGraph{g.size(), g.edges(), vector<string>(g.size(), colour)};
}

auto TropicalGraph::colour_names() const -> vector<string>
{
    vector<string> result;
    result.reserve(size());
    for (auto c : _colour)
        result.push_back(_palette[c]);
    return result;
}

auto TropicalGraph::colour_id(const string & token) const -> optional<int>
{
    auto it = std::find(_palette.begin(), _palette.end(), token);
    if (it == _palette.end())
        return nullopt;
    return int(it - _palette.begin());
}

auto TropicalGraph::colour_class(const string & token) const -> vector<Vertex>
{
    vector<Vertex> result;
    auto id = colour_id(token);
    if (id)
        for (Vertex v = 0; v < size(); ++v)
            if (_colour[v] == *id)
                result.push_back(v);
    return result;
}

Digraph::Digraph(int size, vector<Edge> arcs) :
    _size(size),
    _arcs(std::move(arcs)),
    _out(size < 0 ? 0 : size),
    _in(size < 0 ? 0 : size)
{
    if (size < 0)
        throw InputError{"negative vertex count"};
    for (auto & a : _arcs)
        check_endpoints(size, a, "arc");

    std::sort(_arcs.begin(), _arcs.end());
    auto dup = std::adjacent_find(_arcs.begin(), _arcs.end());
    if (dup != _arcs.end())
        throw InputError{"duplicate arc (" + to_string(dup->first) + ", " + to_string(dup->second) + ")"};

    for (auto & [u, v] : _arcs) {
        _out[u].push_back(v);
        _in[v].push_back(u);
    }
    for (auto & a : _in)
        std::sort(a.begin(), a.end());
}

auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
{
    return std::binary_search(_out[u].begin(), _out[u].end(), v);
}

auto tropical::validate_graph_hom(const Graph & source, const Graph & target, const VertexMap & map) -> bool
{
    check_map(source.size(), target.size(), map);
    for (auto & [u, v] : source.edges())
        if (! target.adjacent(map[u], map[v]))
            return false;
    return true;
}

auto tropical::validate_hom(const TropicalGraph & source, const TropicalGraph & target, const VertexMap & map) -> bool
{
    if (! validate_graph_hom(source, target, map))
        return false;
    for (Vertex v = 0; v < source.size(); ++v)
        if (source.colour_name(v) != target.colour_name(map[v]))
            return false;
    return true;
}

auto tropical::validate_digraph_hom(const Digraph & source, const Digraph & target, const VertexMap & map) -> bool
{
    check_map(source.size(), target.size(), map);
    for (auto & [u, v] : source.arcs())
        if (! target.has_arc(map[u], map[v]))
            return false;
    return true;
}

auto tropical::bipartition(const Graph & g) -> optional<Bipartition>
{
    Bipartition result;
    result.side.assign(g.size(), -1);

    for (Vertex root = 0; root < g.size(); ++root) {
        if (result.side[root] != -1)
            continue;
        result.side[root] = 0;
        queue<Vertex> todo;
        todo.push(root);
        while (! todo.empty()) {
            auto v = todo.front();
            todo.pop();
            for (auto w : g.neighbours(v)) {
                if (result.side[w] == -1) {
                    result.side[w] = 1 - result.side[v];
                    todo.push(w);
                }
                else if (result.side[w] == result.side[v])
                    return nullopt;
            }
        }
    }

    for (Vertex v = 0; v < g.size(); ++v)
        (result.side[v] == 0 ? result.part_a : result.part_b).push_back(v);
    return result;
}

namespace
{
    auto component_labels(const Graph & g) -> pair<vector<int>, int>
    {
        vector<int> label(g.size(), -1);
        int count = 0;
        for (Vertex root = 0; root < g.size(); ++root) {
            if (label[root] != -1)
                continue;
            vector<Vertex> stack{root};
            label[root] = count;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : g.neighbours(v))
                    if (label[w] == -1) {
                        label[w] = count;
                        stack.push_back(w);
                    }
            }
            ++count;
        }
        return {label, count};
    }
}

auto tropical::is_connected(const Graph & g) -> bool
{
    return component_labels(g).second <= 1;
}

auto tropical::induced_subgraph(const TropicalGraph & g, span<const Vertex> keep) -> TropicalGraph
{
    vector<int> position(g.size(), -1);
    for (int i = 0; i < int(keep.size()); ++i)
        position[keep[i]] = i;

    vector<Edge> edges;
    for (auto & [u, v] : g.edges())
        if (position[u] != -1 && position[v] != -1)
            edges.emplace_back(position[u], position[v]);

    vector<string> colours;
    colours.reserve(keep.size());
    for (auto v : keep)
        colours.push_back(g.colour_name(v));

    return TropicalGraph{int(keep.size()), std::move(edges), colours};
}

auto tropical::without_vertex(const TropicalGraph & g, Vertex v) -> pair<TropicalGraph, vector<Vertex>>
{
    vector<Vertex> keep;
    for (Vertex w = 0; w < g.size(); ++w)
        if (w != v)
            keep.push_back(w);
    auto sub = induced_subgraph(g, keep);
    return {std::move(sub), std::move(keep)};
}

auto tropical::connected_components(const TropicalGraph & g) -> vector<Component>
{
    auto [label, count] = component_labels(g);
    vector<Component> result(count);
    for (Vertex v = 0; v < g.size(); ++v)
        result[label[v]].vertices.push_back(v);
    for (auto & c : result)
        c.graph = induced_subgraph(g, c.vertices);
    return result;
}

auto tropical::disjoint_union(const TropicalGraph & a, const TropicalGraph & b) -> TropicalGraph
{
    auto edges = a.edges();
    for (auto & [u, v] : b.edges())
        edges.emplace_back(u + a.size(), v + a.size());
    auto colours = a.colour_names();
    for (auto & c : b.colour_names())
        colours.push_back(c);
    return TropicalGraph{a.size() + b.size(), std::move(edges), colours};
}

auto tropical::split_token(const string & colour, int side) -> string
{
    return "(" + colour + "," + to_string(side) + ")";
}

namespace
{
    auto sides_of_connected_bipartite(const TropicalGraph & g, const char * what) -> vector<int>
    {
        if (! is_connected(g))
            throw PreconditionError{string{what} + " is not connected"};
        auto b = bipartition(g);
        if (! b)
            throw PreconditionError{string{what} + " is not bipartite"};
        return b->side;
    }

    auto recolour_by_side(const TropicalGraph & g, const vector<int> & side, int flip) -> TropicalGraph
    {
        vector<string> colours;
        for (Vertex v = 0; v < g.size(); ++v)
            colours.push_back(split_token(g.colour_name(v), side[v] ^ flip));
        return TropicalGraph{g.size(), g.edges(), colours};
    }
}

auto tropical::split_colours(const TropicalGraph & target) -> TropicalGraph
{
    return recolour_by_side(target, sides_of_connected_bipartite(target, "target"), 0);
}

auto tropical::split_instance(const TropicalGraph & source) -> pair<TropicalGraph, TropicalGraph>
{
    auto side = sides_of_connected_bipartite(source, "source");
    return {recolour_by_side(source, side, 0), recolour_by_side(source, side, 1)};
}
