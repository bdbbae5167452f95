/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_GRAPH_HH
#define ISOLATION_GUARD_GRAPH_HH 1

#include <array>
#include <bit>
#include <cstdint>
#include <exception>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace isolation
{
    inline constexpr int max_vertices = 64;

    class GraphError : public std::exception
    {
        private:
            std::string _message;

        public:
            explicit GraphError(const std::string & message) noexcept;

            auto what() const noexcept -> const char * override;
    };

    /**
     * A set of vertex indices in [0, 64), stored as a single word.
     */
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            class Iterator
            {
                private:
                    std::uint64_t _rest;

                public:
                    explicit constexpr Iterator(std::uint64_t rest) : _rest(rest) { }

                    constexpr auto operator* () const -> int { return std::countr_zero(_rest); }
                    constexpr auto operator++ () -> Iterator & { _rest &= _rest - 1; return *this; }
                    constexpr auto operator== (const Iterator &) const -> bool = default;
            };

            constexpr VertexSet() = default;
            constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) { }
            VertexSet(std::initializer_list<int> vertices);

            /// The set {0, ..., n - 1}.
            static constexpr auto range(int n) -> VertexSet
            {
                return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
            }

            static constexpr auto singleton(int v) -> VertexSet { return VertexSet(std::uint64_t{1} << v); }

            constexpr auto bits() const -> std::uint64_t { return _bits; }
            constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1; }
            constexpr auto size() const -> int { return std::popcount(_bits); }
            constexpr auto empty() const -> bool { return 0 == _bits; }
            /// Smallest member; undefined on the empty set.
            constexpr auto first() const -> int { return std::countr_zero(_bits); }
            constexpr auto max_index() const -> int { return 63 - std::countl_zero(_bits); }

            constexpr auto insert(int v) -> void { _bits |= std::uint64_t{1} << v; }
            constexpr auto erase(int v) -> void { _bits &= ~(std::uint64_t{1} << v); }

            constexpr auto is_subset_of(VertexSet other) const -> bool { return 0 == (_bits & ~other._bits); }
            constexpr auto intersects(VertexSet other) const -> bool { return 0 != (_bits & other._bits); }

            constexpr auto begin() const -> Iterator { return Iterator{_bits}; }
            constexpr auto end() const -> Iterator { return Iterator{0}; }

            auto to_vector() const -> std::vector<int>;
            auto to_string() const -> std::string;

            friend constexpr auto operator| (VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits | b._bits); }
            friend constexpr auto operator& (VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits & b._bits); }
            /// Set difference.
            friend constexpr auto operator- (VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits & ~b._bits); }
            constexpr auto operator|= (VertexSet b) -> VertexSet & { _bits |= b._bits; return *this; }
            constexpr auto operator&= (VertexSet b) -> VertexSet & { _bits &= b._bits; return *this; }
            constexpr auto operator-= (VertexSet b) -> VertexSet & { _bits &= ~b._bits; return *this; }
            constexpr auto operator== (const VertexSet &) const -> bool = default;
            /// Lexicographic order on the sorted member sequences of two sets of equal size.
            auto lex_less(VertexSet other) const -> bool;
    };

    class GraphBuilder;

    /**
     * Simple undirected graph on vertices [0, n), n <= 64, one adjacency word per vertex.
     * Immutable once built.
     */
    class Graph
    {
        private:
            int _n = 0;
            std::array<std::uint64_t, max_vertices> _adj{};

            friend class GraphBuilder;

        public:
            Graph() = default;

            static auto from_edges(int n, const std::vector<std::pair<int, int> > & edges) -> Graph;

            auto size() const -> int { return _n; }
            auto vertices() const -> VertexSet { return VertexSet::range(_n); }
            auto neighbours(int v) const -> VertexSet { return VertexSet(_adj[v]); }
            auto closed_neighbourhood(int v) const -> VertexSet { return VertexSet(_adj[v] | (std::uint64_t{1} << v)); }
            auto adjacent(int u, int v) const -> bool { return (_adj[u] >> v) & 1; }
            auto degree(int v) const -> int { return std::popcount(_adj[v]); }
            auto edge_count() const -> int;
            auto min_degree() const -> int;
            auto max_degree() const -> int;
            auto degree_sequence() const -> std::vector<int>;
            auto edges() const -> std::vector<std::pair<int, int> >;

            auto operator== (const Graph & other) const -> bool;
    };

    class GraphBuilder
    {
        private:
            Graph _graph;

        public:
            explicit GraphBuilder(int n);
            explicit GraphBuilder(const Graph & start);

            auto size() const -> int { return _graph._n; }
            auto add_vertex() -> int;
            auto add_edge(int u, int v) -> GraphBuilder &;
            /// Joins u to every member of vs.
            auto join(int u, VertexSet vs) -> GraphBuilder &;
            auto build() const -> Graph { return _graph; }
    };

    /// An induced subgraph, together with the parent label of each of its vertices.
    struct InducedSubgraph
    {
        Graph graph;
        std::vector<int> to_parent;

        auto lift(VertexSet local) const -> VertexSet;
    };

    auto closed_neighbourhood(const Graph & g, VertexSet s) -> VertexSet;

    auto induced_subgraph(const Graph & g, VertexSet keep) -> InducedSubgraph;

    /// G - X, re-indexed contiguously in original relative order.
    auto delete_vertices(const Graph & g, VertexSet x) -> InducedSubgraph;

    /// Vertex sets of the components of g[within], ordered by smallest member.
    auto component_sets(const Graph & g, VertexSet within) -> std::vector<VertexSet>;

    auto components(const Graph & g) -> std::vector<InducedSubgraph>;

    auto is_connected(const Graph & g) -> bool;

    auto edge_count_within(const Graph & g, VertexSet within) -> int;

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    /// Relabels g so that vertex v becomes perm[v].
    auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph;

    auto isomorphic(const Graph & a, const Graph & b) -> bool;

    /// Isomorphism-invariant hash: equal for isomorphic graphs, rarely equal otherwise.
    auto invariant_hash(const Graph & g) -> std::uint64_t;
}

#endif
