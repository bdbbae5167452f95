/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_ISOLATION_HH
#define ISOLATION_GUARD_ISOLATION_HH 1

#include <isolation/graph.hh>
#include <isolation/patterns.hh>

#include <cstdint>
#include <exception>
#include <optional>
#include <string>

namespace isolation
{
    class BudgetExceeded : public std::exception
    {
        private:
            std::string _message;

        public:
            explicit BudgetExceeded(std::uint64_t budget) noexcept;

            auto what() const noexcept -> const char * override;
    };

    class PreconditionError : public std::exception
    {
        private:
            std::string _message;

        public:
            explicit PreconditionError(const std::string & message) noexcept;

            auto what() const noexcept -> const char * override;
    };

    struct SearchOptions
    {
        /// Search nodes allowed before giving up; the answer is then unknown, never wrong.
        std::uint64_t node_budget = 200'000'000;
    };

    /**
     * A vertex set D claimed to be F-isolating, in the labels of the graph it was computed for.
     */
    struct IsolatingCertificate
    {
        FamilySpec family = FamilySpec::c4();
        VertexSet set;
        int size = 0;
        /// D was checked: G - N[D] contains no F-graph.
        bool verified = false;
        /// floor(n / 5), the bound for C4.
        int bound = 0;
        bool within_bound = false;
    };

    auto make_certificate(const Graph & g, const FamilySpec & f, VertexSet d) -> IsolatingCertificate;

    /// V(G) - N[D].
    auto residual(const Graph & g, VertexSet d) -> VertexSet;

    auto is_isolating(const Graph & g, const FamilySpec & f, VertexSet d) -> bool;

    /**
     * Minimum F-isolating set. The witness is the lexicographically first one among all minimum sets.
     * Throws BudgetExceeded when the node budget runs out.
     */
    auto iota_exact(const Graph & g, const FamilySpec & f, const SearchOptions & options = {}) -> IsolatingCertificate;

    /// Some F-isolating set of size at most max_size, if one exists.
    auto find_isolating_set_within(const Graph & g, const FamilySpec & f, int max_size,
            const SearchOptions & options = {}) -> std::optional<VertexSet>;

    /**
     * Given Y inside N[X] and an F-isolating set d_rest of G - Y (in the labels of delete_vertices(g, y)),
     * returns X together with d_rest lifted to g, which isolates g.
     */
    auto extend_isolating_set(const Graph & g, const FamilySpec & f, VertexSet x, VertexSet y, VertexSet d_rest) -> VertexSet;

    /**
     * Removes a set Y hanging off a single vertex x, where G[{x} + Y] has no F-graph and F is a set of cycles.
     * Isolating sets of the result isolate g, and the isolation number is unchanged.
     */
    auto reduce_pendant(const Graph & g, const FamilySpec & f, int x, VertexSet y) -> InducedSubgraph;

    /// Leaves and isolated vertices removed to a fixpoint. Cycle families only.
    auto strip_leaves(const Graph & g, const FamilySpec & f) -> InducedSubgraph;

    /// Repeated reduce_pendant on every F-free block hanging off a single vertex. Cycle families only.
    auto strip_pendant_blocks(const Graph & g, const FamilySpec & f) -> InducedSubgraph;
}

#endif
