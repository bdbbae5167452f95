/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_TESTS_SUPPORT_ORACLES_HH
#define ISOLATION_GUARD_TESTS_SUPPORT_ORACLES_HH 1

// Slow, obviously-correct reference implementations. They only touch adjacency queries, never the
// search code under test.

#include <isolation/graph.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle
{
    using isolation::Graph;

    inline auto members(const Graph & g, std::uint64_t mask) -> std::vector<int>
    {
        std::vector<int> result;
        for (int v = 0 ; v < g.size() ; ++v)
            if (mask >> v & 1)
                result.push_back(v);
        return result;
    }

    /// Whether the vertices in mask contain a cycle of length exactly k (k >= 3), by trying every ordering.
    inline auto has_k_cycle(const Graph & g, std::uint64_t mask, int k) -> bool
    {
        auto vs = members(g, mask);
        if (int(vs.size()) < k)
            return false;

        std::vector<int> path;
        std::vector<bool> used(g.size(), false);
        std::function<bool ()> extend = [&] () -> bool {
            if (int(path.size()) == k)
                return g.adjacent(path.back(), path.front());
            for (int v : vs) {
                if (used[v] || v < path.front())
                    continue;
                if (! g.adjacent(path.back(), v))
                    continue;
                used[v] = true;
                path.push_back(v);
                bool found = extend();
                path.pop_back();
                used[v] = false;
                if (found)
                    return true;
            }
            return false;
        };

        for (int s : vs) {
            path = { s };
            used[s] = true;
            bool found = extend();
            used[s] = false;
            if (found)
                return true;
        }
        return false;
    }

    /// Acyclic iff edges = vertices - components, with components counted by union-find.
    inline auto is_forest(const Graph & g, std::uint64_t mask) -> bool
    {
        std::vector<int> parent(g.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int (int)> find = [&] (int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = u + 1 ; v < g.size() ; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) {
                    int a = find(u), b = find(v);
                    if (a == b)
                        return false;
                    parent[a] = b;
                }
        return true;
    }

    inline auto has_clique(const Graph & g, std::uint64_t mask, int k) -> bool
    {
        auto vs = members(g, mask);
        if (int(vs.size()) < k)
            return false;
        std::vector<bool> pick(vs.size(), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<int> chosen;
            for (unsigned i = 0 ; i < vs.size() ; ++i)
                if (pick[i])
                    chosen.push_back(vs[i]);
            bool ok = true;
            for (unsigned i = 0 ; i < chosen.size() && ok ; ++i)
                for (unsigned j = i + 1 ; j < chosen.size() && ok ; ++j)
                    ok = g.adjacent(chosen[i], chosen[j]);
            if (ok)
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return false;
    }

    /// Whether g[mask] has a (not necessarily induced) subgraph isomorphic to p, by trying every injection.
    inline auto has_subgraph(const Graph & g, std::uint64_t mask, const Graph & p) -> bool
    {
        auto vs = members(g, mask);
        int k = p.size();
        if (int(vs.size()) < k)
            return false;
        std::vector<int> image;
        std::vector<bool> used(vs.size(), false);
        std::function<bool ()> extend = [&] () -> bool {
            int i = image.size();
            if (i == k)
                return true;
            for (unsigned j = 0 ; j < vs.size() ; ++j) {
                if (used[j])
                    continue;
                bool ok = true;
                for (int a = 0 ; a < i && ok ; ++a)
                    if (p.adjacent(a, i) && ! g.adjacent(image[a], vs[j]))
                        ok = false;
                if (! ok)
                    continue;
                used[j] = true;
                image.push_back(vs[j]);
                bool found = extend();
                image.pop_back();
                used[j] = false;
                if (found)
                    return true;
            }
            return false;
        };
        return extend();
    }

    inline auto closed_neighbourhood(const Graph & g, std::uint64_t d) -> std::uint64_t
    {
        std::uint64_t result = d;
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = 0 ; v < g.size() ; ++v)
                if ((d >> u & 1) && g.adjacent(u, v))
                    result |= std::uint64_t{1} << v;
        return result;
    }

    inline auto all_vertices(const Graph & g) -> std::uint64_t
    {
        return g.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
    }

    /// Minimum size of D with free(V - N[D]), over every subset of V, no reductions.
    template <typename Free>
    auto isolation_number(const Graph & g, Free free) -> int
    {
        int best = g.size();
        std::uint64_t all = all_vertices(g);
        for (std::uint64_t d = 0 ; d <= all ; ++d) {
            int size = std::popcount(d);
            if (size < best && free(all & ~closed_neighbourhood(g, d)))
                best = size;
            if (d == all)
                break;
        }
        return best;
    }

    inline auto c4_isolation_number(const Graph & g) -> int
    {
        return isolation_number(g, [&] (std::uint64_t rest) { return ! has_k_cycle(g, rest, 4); });
    }

    /// Lexicographically first minimum C4-isolating set, comparing sorted member lists.
    inline auto c4_first_witness(const Graph & g) -> std::vector<int>
    {
        int k = c4_isolation_number(g);
        std::vector<int> best;
        bool found = false;
        std::uint64_t all = all_vertices(g);
        for (std::uint64_t d = 0 ; d <= all ; ++d) {
            if (std::popcount(d) == k && ! has_k_cycle(g, all & ~closed_neighbourhood(g, d), 4)) {
                auto m = members(g, d);
                if (! found || m < best)
                    best = m;
                found = true;
            }
            if (d == all)
                break;
        }
        return best;
    }

    /// Isomorphism by trying all n! bijections.
    inline auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        std::vector<int> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int u = 0 ; u < a.size() && ok ; ++u)
                for (int v = u + 1 ; v < a.size() && ok ; ++v)
                    ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    inline auto connected(const Graph & g, std::uint64_t mask) -> bool
    {
        if (0 == mask)
            return true;
        std::uint64_t seen = mask & -mask, frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (int v = 0 ; v < g.size() ; ++v)
                if (frontier >> v & 1)
                    for (int w = 0 ; w < g.size() ; ++w)
                        if ((mask >> w & 1) && g.adjacent(v, w))
                            next |= std::uint64_t{1} << w;
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == mask;
    }
}

#endif
