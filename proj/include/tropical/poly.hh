#ifndef TROPICAL_POLY_HH
#define TROPICAL_POLY_HH 1

#include <tropical/graph.hh>
#include <tropical/solver.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropical
{
    struct FeatureSet
    {
        std::vector<Vertex> type1;
        std::vector<Edge> type2;
        std::vector<Vertex> type3;
        std::vector<Vertex> type4;

        auto empty() const -> bool;
        auto size() const -> std::size_t;
    };

    /// Neighbours carry pairwise distinct colours.
    auto is_forcing(const TropicalGraph & g, Vertex v) -> bool;

    auto forcing_vertices(const TropicalGraph & g) -> std::vector<Vertex>;

    /**
     * Propagates forced images from one anchor per source component. Throws
     * PreconditionError unless every target vertex is forcing.
     */
    auto solve_all_forcing(const TropicalGraph & source, const TropicalGraph & target) -> SolveOutcome;

    /**
     * Each source vertex v chooses between the (at most two) members of
     * pair_sets[assign[v]]; a 2-SAT formula over the source vertices decides
     * whether the choices can be made consistently. Throws PreconditionError if
     * a set is empty, too large or not independent, or assign is malformed.
     */
    auto solve_via_pairs(const TropicalGraph & source, const TropicalGraph & target,
        const std::vector<std::vector<Vertex>> & pair_sets, const std::vector<int> & assign) -> SolveOutcome;

    /// The colour classes, if each is independent with at most two vertices.
    auto colour_class_pairs(const TropicalGraph & target) -> std::optional<std::vector<std::vector<Vertex>>>;

    /**
     * The built-in pair rule: per component, after splitting colours on
     * bipartite components, each colour class is a pair set. Throws
     * PreconditionError where the rule does not apply.
     */
    auto solve_colour_pairs(const TropicalGraph & source, const TropicalGraph & target) -> SolveOutcome;

    auto is_type1(const TropicalGraph & h, Vertex u) -> bool;
    auto is_type2(const TropicalGraph & h, const Edge & e) -> bool;
    auto is_type3(const TropicalGraph & h, Vertex u) -> bool;
    auto is_type4(const TropicalGraph & h, Vertex u) -> bool;

    /// Every feature of each type, ascending.
    auto detect_features(const TropicalGraph & target) -> FeatureSet;

    /// Greedy ascending subset with no two members adjacent. Type 4 features
    /// used together must be pairwise non-adjacent.
    auto non_adjacent_subset(const Graph & h, const std::vector<Vertex> & vertices) -> std::vector<Vertex>;

    struct FeatureGraph
    {
        TropicalGraph graph;

        /// The target vertex each vertex stands for; pendant copies map to the
        /// feature vertex they replace.
        std::vector<Vertex> origin;
    };

    /// Removes type 1 and 3 vertices and type 2 edges, and replaces each type 4
    /// vertex u by one pendant copy per neighbour.
    auto feature_graph(const TropicalGraph & target, const FeatureSet & s) -> FeatureGraph;

    struct ReducedInstance
    {
        FeatureGraph target;
        Graph source;

        /// Original index of each remaining source vertex.
        std::vector<Vertex> source_origin;

        ListAssignment lists;

        /// Images fixed by the eliminations, -1 elsewhere, in target indices.
        VertexMap forced;
    };

    /**
     * Turns a tropical instance into a list instance over H(S), or nothing if
     * some list empties. Throws PreconditionError if s is not a feature set of
     * target or two type 4 members are adjacent.
     */
    auto reduce_by_features(const TropicalGraph & source, const TropicalGraph & target, const FeatureSet & s)
        -> std::optional<ReducedInstance>;

    auto lift_witness(const ReducedInstance & r, const VertexMap & reduced_witness) -> VertexMap;

    auto solve_by_features(const TropicalGraph & source, const TropicalGraph & target, const FeatureSet & s)
        -> SolveOutcome;

    /// A sufficient condition for polynomial list homomorphism: every component
    /// is bipartite and either a tree without an induced G1 (a claw with each
    /// edge subdivided twice), or of order at most 8 without induced C6 or C8.
    auto list_hom_certified(const Graph & h) -> bool;

    enum class Step
    {
        CoreReduced,
        SplitColours,
        AllForcing,
        TwoSat,
        UniqueFeature,
        ExactFallback
    };

    auto step_name(Step s) -> std::string;

    struct StrategyReport
    {
        std::vector<Step> route;
        std::vector<std::string> notes;

        auto uses(Step s) const -> bool;
    };

    struct DispatchOptions
    {
        /// Targets above this size skip core reduction.
        int core_limit = 20;

        /// If false, a target needing the exact solver raises PreconditionError.
        bool allow_fallback = true;
    };

    /// The route each target component would take, independent of any source.
    auto analyze_target(const TropicalGraph & target, const DispatchOptions & options = {}) -> StrategyReport;

    auto dispatch_solve(const TropicalGraph & source, const TropicalGraph & target,
        const DispatchOptions & options = {}) -> std::pair<SolveOutcome, StrategyReport>;
}

#endif
