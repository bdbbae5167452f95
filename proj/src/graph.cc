/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/graph.hh>

#include <algorithm>
#include <sstream>

using std::pair;
using std::sort;
using std::string;
using std::uint64_t;
using std::vector;

using namespace isolation;

namespace
{
    auto mix(uint64_t x) -> uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    using Colours = vector<uint64_t>;

    auto initial_colours(const Graph & g) -> Colours
    {
        Colours result(g.size());
        for (int v = 0 ; v < g.size() ; ++v) {
            int triangles = 0;
            for (int u : g.neighbours(v))
                triangles += (g.neighbours(u) & g.neighbours(v)).size();
            result[v] = mix((uint64_t(g.degree(v)) << 32) | uint64_t(triangles));
        }
        return result;
    }

    auto refine_once(const Graph & g, const Colours & colours) -> Colours
    {
        Colours result(colours.size());
        for (int v = 0 ; v < g.size() ; ++v) {
            uint64_t sum = 0;
            for (int u : g.neighbours(v))
                sum += mix(colours[u]);
            result[v] = mix(colours[v] * 0x100000001b3ULL ^ sum);
        }
        return result;
    }

    auto distinct_count(Colours colours) -> std::size_t
    {
        sort(colours.begin(), colours.end());
        return std::unique(colours.begin(), colours.end()) - colours.begin();
    }

    auto same_multiset(Colours a, Colours b) -> bool
    {
        sort(a.begin(), a.end());
        sort(b.begin(), b.end());
        return a == b;
    }

    auto refine(const Graph & g, Colours colours) -> Colours
    {
        auto classes = distinct_count(colours);
        while (true) {
            auto next = refine_once(g, colours);
            auto next_classes = distinct_count(next);
            colours = std::move(next);
            if (next_classes == classes)
                return colours;
            classes = next_classes;
        }
    }

    // Refines both colourings in lock step; false as soon as they diverge.
    auto refine_jointly(const Graph & a, Colours & ca, const Graph & b, Colours & cb) -> bool
    {
        if (! same_multiset(ca, cb))
            return false;
        auto classes = distinct_count(ca);
        while (true) {
            ca = refine_once(a, ca);
            cb = refine_once(b, cb);
            if (! same_multiset(ca, cb))
                return false;
            auto next_classes = distinct_count(ca);
            if (next_classes == classes)
                return true;
            classes = next_classes;
        }
    }

    auto search_isomorphism(const Graph & a, const Colours & ca, const Graph & b, const Colours & cb) -> bool
    {
        int n = a.size();

        // smallest non-singleton colour class of a, first vertex in it
        int best_vertex = -1, best_size = n + 1;
        for (int v = 0 ; v < n ; ++v) {
            int class_size = int(std::count(ca.begin(), ca.end(), ca[v]));
            if (class_size > 1 && class_size < best_size) {
                best_size = class_size;
                best_vertex = v;
            }
        }

        if (-1 == best_vertex) {
            vector<int> image(n, -1);
            for (int v = 0 ; v < n ; ++v)
                for (int w = 0 ; w < n ; ++w)
                    if (cb[w] == ca[v])
                        image[v] = w;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    if (a.adjacent(u, v) != b.adjacent(image[u], image[v]))
                        return false;
            return true;
        }

        uint64_t individual = mix(ca[best_vertex] ^ 0x5bd1e9955bd1e995ULL);
        for (int w = 0 ; w < n ; ++w) {
            if (cb[w] != ca[best_vertex])
                continue;
            Colours na = ca, nb = cb;
            na[best_vertex] = individual;
            nb[w] = individual;
            if (refine_jointly(a, na, b, nb) && search_isomorphism(a, na, b, nb))
                return true;
        }
        return false;
    }
}

GraphError::GraphError(const string & message) noexcept :
    _message("Graph error: " + message)
{
}

auto GraphError::what() const noexcept -> const char *
{
    return _message.c_str();
}

VertexSet::VertexSet(std::initializer_list<int> vertices)
{
    for (int v : vertices) {
        if (v < 0 || v >= max_vertices)
            throw GraphError{"vertex " + std::to_string(v) + " outside [0, 64)"};
        insert(v);
    }
}

auto VertexSet::to_vector() const -> vector<int>
{
    vector<int> result;
    for (int v : *this)
        result.push_back(v);
    return result;
}

auto VertexSet::to_string() const -> string
{
    std::ostringstream out;
    out << "{";
    bool first_member = true;
    for (int v : *this) {
        out << (first_member ? "" : ", ") << v;
        first_member = false;
    }
    out << "}";
    return out.str();
}

auto VertexSet::lex_less(VertexSet other) const -> bool
{
    auto difference = _bits ^ other._bits;
    if (0 == difference)
        return false;
    return contains(std::countr_zero(difference));
}

auto Graph::from_edges(int n, const vector<pair<int, int> > & edges) -> Graph
{
    GraphBuilder builder(n);
    for (auto & [u, v] : edges)
        builder.add_edge(u, v);
    return builder.build();
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (int v = 0 ; v < _n ; ++v)
        twice += degree(v);
    return twice / 2;
}

auto Graph::min_degree() const -> int
{
    int result = 0;
    for (int v = 0 ; v < _n ; ++v)
        result = (0 == v) ? degree(v) : std::min(result, degree(v));
    return result;
}

auto Graph::max_degree() const -> int
{
    int result = 0;
    for (int v = 0 ; v < _n ; ++v)
        result = std::max(result, degree(v));
    return result;
}

auto Graph::degree_sequence() const -> vector<int>
{
    vector<int> result;
    for (int v = 0 ; v < _n ; ++v)
        result.push_back(degree(v));
    sort(result.begin(), result.end(), std::greater<int>{});
    return result;
}

auto Graph::edges() const -> vector<pair<int, int> >
{
    vector<pair<int, int> > result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v : neighbours(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::operator== (const Graph & other) const -> bool
{
    return _n == other._n && std::equal(_adj.begin(), _adj.begin() + _n, other._adj.begin());
}

GraphBuilder::GraphBuilder(int n)
{
    if (n < 0 || n > max_vertices)
        throw GraphError{"vertex count " + std::to_string(n) + " exceeds capacity of " + std::to_string(max_vertices)};
    _graph._n = n;
}

GraphBuilder::GraphBuilder(const Graph & start) :
    _graph(start)
{
}

auto GraphBuilder::add_vertex() -> int
{
    if (_graph._n == max_vertices)
        throw GraphError{"vertex count exceeds capacity of " + std::to_string(max_vertices)};
    return _graph._n++;
}

auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
{
    if (u < 0 || v < 0 || u >= _graph._n || v >= _graph._n)
        throw GraphError{"edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside [0, "
            + std::to_string(_graph._n) + ")"};
    if (u == v)
        throw GraphError{"loop at vertex " + std::to_string(u)};
    _graph._adj[u] |= uint64_t{1} << v;
    _graph._adj[v] |= uint64_t{1} << u;
    return *this;
}

auto GraphBuilder::join(int u, VertexSet vs) -> GraphBuilder &
{
    for (int v : vs)
        add_edge(u, v);
    return *this;
}

auto InducedSubgraph::lift(VertexSet local) const -> VertexSet
{
    VertexSet result;
    for (int v : local)
        result.insert(to_parent[v]);
    return result;
}

auto isolation::closed_neighbourhood(const Graph & g, VertexSet s) -> VertexSet
{
    VertexSet result = s;
    for (int v : s)
        result |= g.neighbours(v);
    return result;
}

auto isolation::induced_subgraph(const Graph & g, VertexSet keep) -> InducedSubgraph
{
    keep &= g.vertices();
    InducedSubgraph result{Graph{}, keep.to_vector()};
    vector<int> local(g.size(), -1);
    for (std::size_t i = 0 ; i < result.to_parent.size() ; ++i)
        local[result.to_parent[i]] = int(i);

    GraphBuilder builder(keep.size());
    for (int u : keep)
        for (int v : g.neighbours(u) & keep)
            if (u < v)
                builder.add_edge(local[u], local[v]);
    result.graph = builder.build();
    return result;
}

auto isolation::delete_vertices(const Graph & g, VertexSet x) -> InducedSubgraph
{
    return induced_subgraph(g, g.vertices() - x);
}

auto isolation::component_sets(const Graph & g, VertexSet within) -> vector<VertexSet>
{
    vector<VertexSet> result;
    VertexSet remaining = within & g.vertices();
    while (! remaining.empty()) {
        VertexSet component = VertexSet::singleton(remaining.first()), frontier = component;
        while (! frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbours(v);
            next = (next & remaining) - component;
            component |= next;
            frontier = next;
        }
        result.push_back(component);
        remaining -= component;
    }
    return result;
}

auto isolation::components(const Graph & g) -> vector<InducedSubgraph>
{
    vector<InducedSubgraph> result;
    for (auto & c : component_sets(g, g.vertices()))
        result.push_back(induced_subgraph(g, c));
    return result;
}

auto isolation::is_connected(const Graph & g) -> bool
{
    return component_sets(g, g.vertices()).size() <= 1;
}

auto isolation::edge_count_within(const Graph & g, VertexSet within) -> int
{
    int twice = 0;
    for (int v : within)
        twice += (g.neighbours(v) & within).size();
    return twice / 2;
}

auto isolation::disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    GraphBuilder builder(a.size() + b.size());
    for (auto & [u, v] : a.edges())
        builder.add_edge(u, v);
    for (auto & [u, v] : b.edges())
        builder.add_edge(a.size() + u, a.size() + v);
    return builder.build();
}

auto isolation::relabel(const Graph & g, const vector<int> & perm) -> Graph
{
    if (int(perm.size()) != g.size())
        throw GraphError{"permutation size does not match vertex count"};
    VertexSet image;
    for (int p : perm) {
        if (p < 0 || p >= g.size() || image.contains(p))
            throw GraphError{"relabelling is not a permutation"};
        image.insert(p);
    }

    GraphBuilder builder(g.size());
    for (auto & [u, v] : g.edges())
        builder.add_edge(perm[u], perm[v]);
    return builder.build();
}

auto isolation::isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence())
        return false;
    if (0 == a.size())
        return true;

    Colours ca = initial_colours(a), cb = initial_colours(b);
    if (! refine_jointly(a, ca, b, cb))
        return false;
    return search_isomorphism(a, ca, b, cb);
}

auto isolation::invariant_hash(const Graph & g) -> uint64_t
{
    auto colours = refine(g, initial_colours(g));
    sort(colours.begin(), colours.end());
    uint64_t result = mix((uint64_t(g.size()) << 32) | uint64_t(g.edge_count()));
    for (auto c : colours)
        result = mix(result ^ c);
    return result;
}
