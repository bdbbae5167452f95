/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_PATTERNS_HH
#define ISOLATION_GUARD_PATTERNS_HH 1

#include <isolation/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace isolation
{
    /// C_k, with C_1 = K_1 and C_2 = K_2.
    struct SingleCycle
    {
        int length;
    };

    struct AllCycles
    {
    };

    struct Clique
    {
        int order;
    };

    struct PatternList
    {
        std::vector<Graph> patterns;
    };

    /**
     * Which family of graphs is being isolated.
     */
    class FamilySpec
    {
        public:
            using Variant = std::variant<SingleCycle, AllCycles, Clique, PatternList>;

        private:
            Variant _variant;

            explicit FamilySpec(Variant v);

        public:
            static auto single_cycle(int length) -> FamilySpec;
            static auto c4() -> FamilySpec { return single_cycle(4); }
            static auto all_cycles() -> FamilySpec;
            static auto clique(int order) -> FamilySpec;
            static auto pattern_list(std::vector<Graph> patterns) -> FamilySpec;

            auto variant() const -> const Variant & { return _variant; }

            /// True when every member is a cycle of length at least 3 (pendant reductions are legal).
            auto is_cycle_family() const -> bool;

            auto is_c4() const -> bool;

            /// Command-line spelling: "c4", "ck:5", "cycles", "clique:3", or "patterns(n)".
            auto name() const -> std::string;
    };

    /// Parses "c4", "cycles", "ck:<k>", "clique:<k>", "diamond", "k4".
    auto parse_family(std::string_view text) -> FamilySpec;

    namespace catalog
    {
        auto k1() -> const Graph &;
        auto k2() -> const Graph &;
        auto k3() -> const Graph &;
        auto p3() -> const Graph &;
        auto c4() -> const Graph &;
        auto diamond() -> const Graph &;
        auto k4() -> const Graph &;

        /// The six exceptional 9-vertex graphs, index in [1, 6], vertex i of the drawing is vertex i - 1.
        auto g9(int index) -> const Graph &;

        auto cycle(int length) -> Graph;
        auto path(int n) -> Graph;
        auto complete(int n) -> Graph;
    }

    enum class SmallExceptional
    {
        c4,
        diamond,
        k4
    };

    struct NotExceptional
    {
        auto operator== (const NotExceptional &) const -> bool = default;
    };

    struct G4Member
    {
        SmallExceptional kind;

        auto operator== (const G4Member &) const -> bool = default;
    };

    struct G9Member
    {
        int index;

        auto operator== (const G9Member &) const -> bool = default;
    };

    using ExceptionalClass = std::variant<NotExceptional, G4Member, G9Member>;

    auto is_exceptional(const ExceptionalClass & c) -> bool;

    /// 1 for the 4-vertex graphs, 2 for the 9-vertex graphs, 0 otherwise.
    auto exceptional_isolation_number(const ExceptionalClass & c) -> int;

    auto to_string(const ExceptionalClass & c) -> std::string;

    /// Classification up to isomorphism against the nine stored graphs.
    auto classify_exceptional(const Graph & g) -> ExceptionalClass;

    /// Vertex set of some copy of p in g[within], if any (subgraph, not induced).
    auto find_pattern_copy(const Graph & g, const Graph & p, VertexSet within) -> std::optional<VertexSet>;

    auto contains_pattern(const Graph & g, const Graph & p) -> bool;

    /// Four vertices spanning a 4-cycle of g[within], if any.
    auto find_c4(const Graph & g, VertexSet within) -> std::optional<VertexSet>;

    auto contains_c4(const Graph & g, VertexSet within) -> bool;

    /// Vertex set of some F-graph in g[within], if any. For all cycles this is a shortest cycle.
    auto find_copy(const Graph & g, const FamilySpec & f, VertexSet within) -> std::optional<VertexSet>;

    auto is_family_free(const Graph & g, const FamilySpec & f) -> bool;

    auto is_family_free_within(const Graph & g, const FamilySpec & f, VertexSet within) -> bool;
}

#endif
