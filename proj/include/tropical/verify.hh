#ifndef TROPICAL_VERIFY_HH
#define TROPICAL_VERIFY_HH 1

#include <tropical/gadgets.hh>
#include <tropical/graph.hh>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tropical
{
    constexpr std::uint64_t default_seed = 20250611;

    struct Check
    {
        std::string name;
        bool passed = false;
        std::string detail;

        /// Informational checks are reported but do not decide the verdict.
        bool gating = true;
    };

    struct Report
    {
        std::string name;
        std::vector<Check> checks;
        std::vector<std::pair<std::string, std::string>> info;

        auto add(std::string check, bool passed, std::string detail = {}, bool gating = true) -> void;
        auto note(std::string key, std::string value) -> void;

        /// Every gating check passed.
        auto passed() const -> bool;

        /// Keys in a fixed order: name, result, checks, info.
        auto to_json() const -> std::string;

        /// One line per check, then the verdict.
        auto to_text() const -> std::string;
    };

    /// Two-colours the variables every possible way. Throws InputError above 24
    /// variables.
    auto nae_brute(const NaeFormula & f) -> bool;

    /// Truth table. Throws InputError above 24 variables.
    auto sat_brute(const CnfFormula & f) -> bool;

    /**
     * Enumerates every map of the single pair gadget to the target cycle with
     * U_G on g0, and compares the named images with the two expected patterns.
     * Also checks which sigma/rho choices extend over the triple gadget. Unpinned
     * counts are informational.
     */
    auto verify_c48_claim(Palette palette = Palette::Four) -> Report;

    /// P onto P needs matching ends; Q maps onto P either way round.
    auto verify_pq_lemma(Palette palette = Palette::Four) -> Report;

    /**
     * Properties of the zig-zag paths for odd l at most 7 and even k at most 6.
     * The designated end of P_i (right) or Q_j (left) is mapped to the
     * designated end. The last two properties quantify over all graphs and are
     * checked on a fixed catalogue only. Throws InputError outside the bounds.
     */
    auto verify_zigzag_properties(int l, int k) -> Report;

    /// Formula verdict against solvability of the gadget on build_c48.
    auto roundtrip_nae(const NaeFormula & f, Palette palette = Palette::Four) -> Report;

    /// Every set of at most max_clauses distinct ordered clauses over the
    /// variables.
    auto roundtrip_nae_all(int variables, int max_clauses) -> Report;

    /// List homomorphism to C6 against solvability of the gadget on build_h9.
    auto roundtrip_h9(const Graph & g, const std::vector<std::vector<int>> & lists) -> Report;

    /// Random bipartite graphs with at most max_vertices vertices and lists
    /// each drawn from one side of the cycle.
    auto roundtrip_h9_random(int instances, std::uint64_t seed = default_seed, int max_vertices = 8) -> Report;

    /// Random sources, dispatch_solve against the exact solver.
    auto cross_check_poly(const TropicalGraph & target, int trials, std::uint64_t seed = default_seed,
        int max_source = 8) -> Report;
}

#endif
