/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_CONSTRUCTIVE_HH
#define ISOLATION_GUARD_CONSTRUCTIVE_HH 1

#include <isolation/graph.hh>
#include <isolation/isolation.hh>
#include <isolation/patterns.hh>

#include <exception>
#include <string>
#include <vector>

namespace isolation
{
    class NotConnected : public std::exception
    {
        public:
            auto what() const noexcept -> const char * override;
    };

    class ExceptionalInput : public std::exception
    {
        private:
            ExceptionalClass _class;
            std::string _message;

        public:
            explicit ExceptionalInput(ExceptionalClass c) noexcept;

            auto exceptional_class() const -> const ExceptionalClass & { return _class; }
            auto what() const noexcept -> const char * override;
    };

    /**
     * One level of the recursion: the rule that fired, the vertices it put into the set (in the
     * labels of the top-level input), and the sizes of the pieces handed to deeper levels.
     */
    struct TraceStep
    {
        std::string rule;
        VertexSet chosen;
        std::vector<int> targets;
        int depth = 0;
    };

    struct ConstructiveTrace
    {
        std::vector<TraceStep> steps;

        /// Union of every step's chosen vertices; equals the final set.
        auto replay() const -> VertexSet;
    };

    struct ConstructiveResult
    {
        IsolatingCertificate certificate;
        ConstructiveTrace trace;
    };

    /**
     * C4-isolating set of size at most floor(n / 5) for a connected graph that is not one of the nine
     * exceptional graphs. Every result is checked before it is returned.
     */
    auto isolate_c4(const Graph & g) -> ConstructiveResult;

    struct ComponentwiseResult
    {
        IsolatingCertificate certificate;
        /// Components whose share of the set exceeds floor(|C| / 5); these are exactly the exceptional ones.
        std::vector<VertexSet> over_bound_components;
        ConstructiveTrace trace;
    };

    /// isolate_c4 per component; exceptional components get their exact minimum.
    auto isolate_c4_any(const Graph & g) -> ComponentwiseResult;

    /**
     * For one of the six exceptional 9-vertex graphs and a vertex v, the lowest v' != v such that
     * g - ({v} + N[v']) is a path or triangle on three vertices.
     */
    auto g9_witness(const Graph & g, int v) -> int;
}

#endif
