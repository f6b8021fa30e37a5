#ifndef TROPICAL_SOLVER_HH
#define TROPICAL_SOLVER_HH 1

#include <tropical/graph.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace tropical
{
    /// Allowed target vertices for each source vertex.
    struct ListAssignment
    {
        std::vector<std::vector<Vertex>> lists;
    };

    enum class SolveStatus
    {
        Solvable,
        Unsolvable
    };

    struct SolveStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t propagations = 0;
    };

    struct SolveOutcome
    {
        SolveStatus status = SolveStatus::Unsolvable;
        std::optional<VertexMap> witness;
        SolveStats stats;

        auto solvable() const -> bool { return status == SolveStatus::Solvable; }
    };

    struct Enumeration
    {
        std::vector<VertexMap> maps;
        bool truncated = false;
    };

    constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

    /// Every target vertex allowed everywhere.
    auto full_lists(int source_size, int target_size) -> ListAssignment;

    /// Each source vertex gets the target vertices of its colour.
    auto colour_lists(const TropicalGraph & source, const TropicalGraph & target) -> ListAssignment;

    /**
     * Decides whether a list homomorphism exists. Arc consistency is maintained
     * throughout; branching picks the smallest domain, lowest index first, and
     * tries values in ascending order, so witnesses are deterministic. Throws
     * InputError if the lists are malformed.
     */
    auto solve_list_hom(const Graph & source, const Graph & target, const ListAssignment & lists) -> SolveOutcome;

    /// All list homomorphisms in lexicographic order of image vectors.
    auto enumerate_homs(const Graph & source, const Graph & target, const ListAssignment & lists,
        std::size_t limit = unlimited) -> Enumeration;

    auto solve_trop_hom(const TropicalGraph & source, const TropicalGraph & target) -> SolveOutcome;

    auto enumerate_trop_homs(const TropicalGraph & source, const TropicalGraph & target,
        std::size_t limit = unlimited) -> Enumeration;

    auto solve_digraph_hom(const Digraph & source, const Digraph & target) -> SolveOutcome;

    /**
     * Decides whether host retracts onto the copy of target given by
     * embedded_copy, which maps each target vertex to a host vertex. Throws
     * InputError unless embedded_copy is an injective colour preserving
     * homomorphism.
     */
    auto solve_retraction(const TropicalGraph & host, const TropicalGraph & target,
        const VertexMap & embedded_copy) -> SolveOutcome;

    /// Domains after arc consistency, or nothing if some domain wipes out.
    auto arc_consistent_lists(const Graph & source, const Graph & target, const ListAssignment & lists)
        -> std::optional<ListAssignment>;
}

#endif
