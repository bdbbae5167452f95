/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_TESTS_SUPPORT_ENUMERATE_HH
#define ISOLATION_GUARD_TESTS_SUPPORT_ENUMERATE_HH 1

#include <isolation/graph.hh>

#include <cstddef>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace isolation::support
{
    /// Known counts of connected graphs up to isomorphism, indexed by n (0..9).
    auto connected_graph_count(int n) -> std::size_t;

    /**
     * One graph6 string per isomorphism class of connected graphs on 1 .. max_n vertices;
     * element n - 1 holds the n-vertex graphs.
     */
    auto connected_catalogs(int max_n) -> std::vector<std::vector<std::string> >;

    /// Writes (or reuses, when the record count is already right) catalogs as dir/connected<n>.g6.
    auto ensure_catalogs(const std::filesystem::path & dir, int max_n) -> std::vector<std::filesystem::path>;

    auto write_catalog(const std::filesystem::path & path, const std::vector<std::string> & records) -> void;

    /// Uniform labelled random graph, each edge with probability p.
    auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph;

    /// Random connected graph with maximum degree at most max_degree: a random tree-like spine plus extra edges.
    auto random_connected_bounded(std::mt19937_64 & rng, int n, int max_degree, int extra_edges) -> Graph;

    /// Random tree on n vertices.
    auto random_tree(std::mt19937_64 & rng, int n) -> Graph;
}

#endif
