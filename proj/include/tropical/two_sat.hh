#ifndef TROPICAL_TWO_SAT_HH
#define TROPICAL_TWO_SAT_HH 1

#include <optional>
#include <utility>
#include <vector>

namespace tropical
{
    struct Literal
    {
        int variable;
        bool positive;

        auto operator== (const Literal &) const -> bool = default;
    };

    using TwoClause = std::pair<Literal, Literal>;

    struct TwoSatFormula
    {
        int variables = 0;
        std::vector<TwoClause> clauses;

        auto satisfied_by(const std::vector<bool> & assignment) const -> bool;
    };

    /// Implication graph and strongly connected components. Returns a satisfying
    /// assignment or nothing. Throws InputError on out of range variables.
    auto solve_2sat(const TwoSatFormula & formula) -> std::optional<std::vector<bool>>;
}

#endif
