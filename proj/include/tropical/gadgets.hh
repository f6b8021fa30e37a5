#ifndef TROPICAL_GADGETS_HH
#define TROPICAL_GADGETS_HH 1

#include <tropical/graph.hh>
#include <tropical/two_sat.hh>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tropical
{
    enum class Palette
    {
        Four,
        Three,
        Two
    };

    enum class PathKind
    {
        P,
        Q
    };

    auto palette_name(Palette p) -> std::string;

    /// Throws InputError on anything other than four, three or two.
    auto parse_palette(const std::string & name) -> Palette;

    struct GadgetGraph
    {
        TropicalGraph graph;
        std::map<std::string, Vertex> names;

        /// Throws InputError if the label is unknown.
        auto named(const std::string & label) const -> Vertex;
    };

    /// Clauses are variable triples with no negation.
    struct NaeFormula
    {
        int variables = 0;
        std::vector<std::array<int, 3>> clauses;
    };

    struct CnfFormula
    {
        int variables = 0;
        std::vector<std::vector<Literal>> clauses;
    };

    /// Throws InputError on out of range indices or a repeated variable.
    auto validate_nae(const NaeFormula & f) -> void;

    auto validate_cnf(const CnfFormula & f) -> void;

    /**
     * Colours along a P or Q path from start to end, each of which is "G" or
     * "B". A P path needs distinct ends. Extra inserts that many Yellow pairs
     * before the Red vertex, and for Q the same again after it, keeping Q
     * symmetric. The palette recolours the result.
     */
    auto pq_colours(PathKind kind, const std::string & start, const std::string & end,
        Palette palette = Palette::Four, int extra = 0) -> std::vector<std::string>;

    /// A lone P or Q path, with its ends named "start" and "end".
    auto build_pq_path(PathKind kind, const std::string & start, const std::string & end,
        Palette palette = Palette::Four, int extra = 0) -> GadgetGraph;

    /// Smallest cycle length supported by the palette, as k in C_2k.
    auto c48_minimum(Palette palette) -> int;

    /**
     * The target cycle: P arcs g0 -> b0 -> g1 -> b1 -> g2 -> b2 -> g0, with
     * Yellow pairs spread over the arcs to reach 2k vertices. Names g0, b0, g1,
     * b1, g2, b2. Throws InputError if k is below c48_minimum.
     */
    auto build_c48(Palette palette = Palette::Four, int k = 24) -> GadgetGraph;

    /// Yellow pairs a source P or Q path needs to map onto every arc of
    /// build_c48(palette, k).
    auto c48_source_extra(Palette palette, int k) -> int;

    /**
     * The source graph for a NAE formula: a shared U_G, a six-arc cycle per
     * variable pair through U_G, three connecting trees per variable triple and
     * one path per clause. Pair vertices are named like b1_x0x2, tree vertices
     * like t1_g0_x0x1x2, clause vertices like c3_b0.
     */
    auto nae3sat_to_c48(const NaeFormula & f, Palette palette = Palette::Four, int k = 24) -> GadgetGraph;

    /// Vertices Blue, and each arc (u, v) becomes a path u, Red, Green, v.
    auto tropicalize_digraph(const Digraph & d) -> TropicalGraph;

    /// A Black six-cycle "1" to "6" with pendants "red" on 1, "green" on 3 and
    /// "yellow" on 5. Cycle vertex with label i has index i - 1.
    auto build_h9() -> GadgetGraph;

    /**
     * Black copy of source plus a small tree on each vertex that pins its
     * image in build_h9 to its list. Lists use labels 1 to 6 and must be a
     * nonempty subset of {1, 3, 5} or of {2, 4, 6}. Source vertex u keeps
     * index u and is named "u" followed by its index.
     */
    auto c6_listhom_to_h9(const Graph & source, const std::vector<std::vector<int>> & lists) -> GadgetGraph;

    /// Run colours alternate from a single White. Run 0 and the last run have
    /// length 1, the others 4, except interior run index which has length 2.
    /// Index 0 means no shortened run.
    auto zigzag_colours(int runs, int index = 0) -> std::vector<std::string>;

    auto zigzag_path(int runs, int index = 0) -> TropicalGraph;

    /// Same run colours with every interior run of length 2.
    auto forcing_path(int runs) -> TropicalGraph;

    struct ZigzagParameters
    {
        /// Runs in the P family, odd, and in the Q family, even.
        int l = 0, k = 0;
        Bipartition parts;
    };

    /// Throws InputError unless h is bipartite.
    auto zigzag_parameters(const Graph & h) -> ZigzagParameters;

    /**
     * White copy of h; the i-th vertex of part A (the side of vertex 0) is the
     * right end of a copy of zigzag_path(l, i), and the j-th vertex of part B
     * is the left end of zigzag_path(k, j). Vertex v of h keeps index v and is
     * named "h" followed by its index.
     */
    auto build_zigzag_gadget(const Graph & h) -> GadgetGraph;

    struct RetractionInstance
    {
        GadgetGraph host;
        GadgetGraph target;

        /// Where each target vertex sits inside host.
        VertexMap copy;
    };

    /**
     * The host graph g made White, with build_zigzag_gadget(h) grown on the
     * copy of h, and a copy of zigzag_path(l) ending at every vertex on the
     * A side of g outside the copy. Throws InputError unless g is connected
     * and bipartite and copy is an injective homomorphism that respects the
     * sides of h.
     */
    auto transform_retraction_instance(const Graph & g, const Graph & h, const VertexMap & copy)
        -> RetractionInstance;

    enum class SBlock
    {
        S12,
        S1T,
        S2T
    };

    auto parse_s_block(const std::string & name) -> SBlock;

    /// Black path x1 .. x7 with BlackCross leaves on x1 and x7 and two kinds of
    /// leaf on x2, x6 and x4.
    auto build_s_block(SBlock kind) -> GadgetGraph;
}

#endif
