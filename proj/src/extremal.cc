/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/extremal.hh>
#include <isolation/patterns.hh>

using namespace isolation;

auto ExtremalParameters::for_order(int n, int k) -> ExtremalParameters
{
    if (k < 1)
        throw GraphError{"pattern must have at least one vertex"};
    int spine = n / (k + 1);
    return ExtremalParameters{n, k, spine, n - k * spine};
}

auto isolation::build_extremal(int n, const Graph & pattern) -> Graph
{
    if (0 == pattern.size())
        throw GraphError{"empty pattern"};
    if (n < 1)
        throw GraphError{"vertex count must be positive"};
    if (n > max_vertices)
        throw GraphError{"vertex count " + std::to_string(n) + " exceeds capacity of " + std::to_string(max_vertices)};
    if (! is_connected(pattern))
        throw GraphError{"pattern must be connected"};

    int k = pattern.size();
    if (n <= k)
        return catalog::path(n);

    auto p = ExtremalParameters::for_order(n, k);
    GraphBuilder builder(n);
    for (int i = 0 ; i + 1 < p.spine ; ++i)
        builder.add_edge(i, i + 1);
    for (int j = p.spine ; j < p.path ; ++j)
        builder.add_edge(p.spine - 1, j);

    for (int i = 0 ; i < p.spine ; ++i) {
        int offset = p.path + i * k;
        for (auto & [a, b] : pattern.edges())
            builder.add_edge(offset + a, offset + b);
        for (int a = 0 ; a < k ; ++a)
            builder.add_edge(i, offset + a);
    }
    return builder.build();
}

auto isolation::verify_extremal(int n, const SearchOptions & options) -> bool
{
    auto b = build_extremal(n, catalog::c4());
    auto certificate = iota_exact(b, FamilySpec::c4(), options);
    return certificate.verified && certificate.size == n / 5;
}
