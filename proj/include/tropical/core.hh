#ifndef TROPICAL_CORE_HH
#define TROPICAL_CORE_HH 1

#include <tropical/graph.hh>

#include <cstdint>
#include <optional>

namespace tropical
{
    struct CoreResult
    {
        TropicalGraph core;

        /// Original index of each core vertex.
        std::vector<Vertex> vertices;

        /// Retraction of the input onto the core, in core indices.
        VertexMap retraction;
    };

    /// An endomorphism of g missing some vertex, trying to drop each vertex in
    /// ascending order.
    auto find_proper_retract(const TropicalGraph & g) -> std::optional<VertexMap>;

    /// Deletes vertices while a proper retract exists. With a seed, candidate
    /// vertices are tried in a shuffled order; the result is isomorphic either way.
    auto core(const TropicalGraph & g, std::optional<std::uint64_t> shuffle_seed = std::nullopt) -> CoreResult;

    auto is_core(const TropicalGraph & g) -> bool;

    /// Colour preserving isomorphism by exhaustive backtracking.
    auto iso_check(const TropicalGraph & a, const TropicalGraph & b) -> std::optional<VertexMap>;
}

#endif
