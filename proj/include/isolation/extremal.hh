/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_EXTREMAL_HH
#define ISOLATION_GUARD_EXTREMAL_HH 1

#include <isolation/graph.hh>
#include <isolation/isolation.hh>

namespace isolation
{
    struct ExtremalParameters
    {
        int n;
        /// Order of the attached pattern.
        int k;
        /// Spine length floor(n / (k + 1)); also the number of pattern copies.
        int spine;
        /// spine plus surplus path vertices, n - k * spine.
        int path;

        static auto for_order(int n, int k) -> ExtremalParameters;
    };

    /**
     * The extremal graph: a spine path 0 .. spine-1, surplus vertices spine .. path-1 hanging off the
     * last spine vertex, then the pattern copies in order, copy i fully joined to spine vertex i.
     * A plain path when n <= k.
     */
    auto build_extremal(int n, const Graph & pattern) -> Graph;

    /// Whether the C4-isolation number of the C4 extremal graph on n vertices is exactly floor(n / 5).
    auto verify_extremal(int n, const SearchOptions & options = {}) -> bool;
}

#endif
