#ifndef TROPICAL_GRAPH_HH
#define TROPICAL_GRAPH_HH 1

#include <tropical/errors.hh>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tropical
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Image of each source vertex, indexed by source vertex. Unmapped is -1.
    using VertexMap = std::vector<Vertex>;

    /**
     * A finite simple undirected graph. Edges are stored normalised (u < v)
     * and sorted.
     */
    class Graph
    {
    private:
        int _size = 0;
        std::vector<Edge> _edges;
        std::vector<std::vector<Vertex>> _adjacency;

    public:
        Graph() = default;

        /// Throws InputError on out of range endpoints, loops or duplicates.
        explicit Graph(int size, std::vector<Edge> edges = {});

        auto size() const -> int { return _size; }
        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency[v]; }
        auto degree(Vertex v) const -> int { return int(_adjacency[v].size()); }
        auto adjacent(Vertex u, Vertex v) const -> bool;
    };

    /**
     * A graph with a total colour map. Colour tokens are interned in order of
     * first appearance, so colour ids are stable for a given input.
     */
    class TropicalGraph : public Graph
    {
    private:
        std::vector<int> _colour;
        std::vector<std::string> _palette;

    public:
        TropicalGraph() = default;

        TropicalGraph(int size, std::vector<Edge> edges, const std::vector<std::string> & colours);

        static auto monochrome(const Graph & g, const std::string & colour) -> TropicalGraph;

        auto colour(Vertex v) const -> int { return _colour[v]; }
        auto colour_name(Vertex v) const -> const std::string & { return _palette[_colour[v]]; }
        auto colour_names() const -> std::vector<std::string>;
        auto palette() const -> const std::vector<std::string> & { return _palette; }
        auto colour_id(const std::string & token) const -> std::optional<int>;
        auto colour_class(const std::string & token) const -> std::vector<Vertex>;
    };

    class Digraph
    {
    private:
        int _size = 0;
        std::vector<Edge> _arcs;
        std::vector<std::vector<Vertex>> _out, _in;

    public:
        Digraph() = default;

        /// Throws InputError on out of range endpoints, loops or duplicate arcs.
        explicit Digraph(int size, std::vector<Edge> arcs = {});

        auto size() const -> int { return _size; }
        auto arcs() const -> const std::vector<Edge> & { return _arcs; }
        auto out_neighbours(Vertex v) const -> std::span<const Vertex> { return _out[v]; }
        auto in_neighbours(Vertex v) const -> std::span<const Vertex> { return _in[v]; }
        auto has_arc(Vertex u, Vertex v) const -> bool;
    };

    struct Bipartition
    {
        std::vector<Vertex> part_a, part_b;

        /// 0 for part_a, 1 for part_b.
        std::vector<int> side;
    };

    struct Component
    {
        TropicalGraph graph;

        /// Original index of each component vertex.
        std::vector<Vertex> vertices;
    };

    /// Checks edges and colours. Throws InputError if the map is not total or an
    /// image is out of range.
    auto validate_hom(const TropicalGraph & source, const TropicalGraph & target, const VertexMap & map) -> bool;

    /// Checks edges only.
    auto validate_graph_hom(const Graph & source, const Graph & target, const VertexMap & map) -> bool;

    auto validate_digraph_hom(const Digraph & source, const Digraph & target, const VertexMap & map) -> bool;

    /// In each component the lowest numbered vertex goes in part_a.
    auto bipartition(const Graph & g) -> std::optional<Bipartition>;

    auto is_connected(const Graph & g) -> bool;

    /// Components ordered by lowest vertex, vertex order preserved.
    auto connected_components(const TropicalGraph & g) -> std::vector<Component>;

    /// Induced subgraph on keep, in the order given.
    auto induced_subgraph(const TropicalGraph & g, std::span<const Vertex> keep) -> TropicalGraph;

    auto without_vertex(const TropicalGraph & g, Vertex v) -> std::pair<TropicalGraph, std::vector<Vertex>>;

    auto disjoint_union(const TropicalGraph & a, const TropicalGraph & b) -> TropicalGraph;

    auto split_token(const std::string & colour, int side) -> std::string;

    /// Recolours c to (c, side bit), with bit 0 on the side of vertex 0.
    /// Throws PreconditionError unless target is connected and bipartite.
    auto split_colours(const TropicalGraph & target) -> TropicalGraph;

    /// Both side-bit assignments of a connected bipartite source: the side of
    /// vertex 0 gets bit 0 in the first and bit 1 in the second.
    auto split_instance(const TropicalGraph & source) -> std::pair<TropicalGraph, TropicalGraph>;
}

#endif
