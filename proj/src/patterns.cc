/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/patterns.hh>
#include <isolation/graph6.hh>

#include <algorithm>
#include <charconv>
#include <functional>

using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::vector;

using namespace isolation;

namespace
{
    template <typename... Ts_>
    struct Overloaded : Ts_...
    {
        using Ts_::operator()...;
    };

    template <typename... Ts_>
    Overloaded(Ts_...) -> Overloaded<Ts_...>;

    auto from_one_based(int n, const vector<pair<int, int> > & edges) -> Graph
    {
        GraphBuilder builder(n);
        for (auto & [u, v] : edges)
            builder.add_edge(u - 1, v - 1);
        return builder.build();
    }

    auto without_edges(const Graph & g, const vector<pair<int, int> > & removed_one_based) -> Graph
    {
        GraphBuilder builder(g.size());
        for (auto & [u, v] : g.edges()) {
            bool removed = false;
            for (auto & [a, b] : removed_one_based)
                if ((u == a - 1 && v == b - 1) || (u == b - 1 && v == a - 1))
                    removed = true;
            if (! removed)
                builder.add_edge(u, v);
        }
        return builder.build();
    }

    auto make_g9() -> vector<Graph>
    {
        vector<Graph> result;
        result.push_back(from_one_based(9, {
                    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 1},
                    {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {7, 9}, {8, 1}, {9, 2} }));
        result.push_back(from_one_based(9, {
                    {5, 6}, {5, 8}, {5, 9}, {4, 5}, {1, 6}, {6, 7}, {6, 8}, {1, 2}, {1, 7},
                    {1, 9}, {2, 3}, {2, 8}, {2, 9}, {3, 4}, {3, 7}, {3, 8}, {4, 7}, {4, 9} }));
        result.push_back(from_one_based(9, {
                    {5, 6}, {5, 7}, {5, 8}, {4, 5}, {6, 7}, {6, 8}, {1, 6}, {1, 7}, {4, 7},
                    {2, 8}, {3, 8}, {3, 4}, {4, 9}, {1, 2}, {1, 9}, {2, 3}, {2, 9}, {3, 9} }));
        result.push_back(from_one_based(9, {
                    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {2, 7}, {3, 6}, {3, 7},
                    {4, 5}, {4, 8}, {4, 9}, {5, 8}, {5, 9}, {6, 7}, {6, 9}, {7, 8}, {8, 9} }));
        result.push_back(without_edges(result[3], {{2, 3}}));
        result.push_back(without_edges(result[3], {{2, 3}, {4, 5}}));
        return result;
    }

    auto parse_positive(string_view text, string_view what) -> int
    {
        int value = 0;
        auto [end, error] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (error != std::errc{} || end != text.data() + text.size() || value < 1)
            throw FormatError{"bad " + string{what} + " '" + string{text} + "'"};
        return value;
    }

    auto degrees_within(const Graph & g, VertexSet within) -> std::array<int, max_vertices>
    {
        std::array<int, max_vertices> result{};
        for (int v : within)
            result[v] = (g.neighbours(v) & within).size();
        return result;
    }

    // Pattern vertices ordered so that each one after the first has as many earlier neighbours as possible.
    auto matching_order(const Graph & p) -> vector<int>
    {
        vector<int> order;
        VertexSet placed;
        while (int(order.size()) < p.size()) {
            int best = -1, best_links = -1, best_degree = -1;
            for (int v : p.vertices() - placed) {
                int links = (p.neighbours(v) & placed).size();
                if (links > best_links || (links == best_links && p.degree(v) > best_degree)) {
                    best = v;
                    best_links = links;
                    best_degree = p.degree(v);
                }
            }
            order.push_back(best);
            placed.insert(best);
        }
        return order;
    }

    auto find_shortest_cycle(const Graph & g, VertexSet within) -> optional<VertexSet>
    {
        optional<VertexSet> best;
        for (int u : within)
            for (int v : g.neighbours(u) & within) {
                if (v < u)
                    continue;
                // shortest u-v path avoiding the edge uv
                std::array<int, max_vertices> parent{};
                VertexSet seen = VertexSet::singleton(u), frontier = seen;
                bool found = false;
                while (! frontier.empty() && ! found) {
                    VertexSet next;
                    for (int a : frontier)
                        for (int b : (g.neighbours(a) & within) - seen - next) {
                            if (a == u && b == v)
                                continue;
                            parent[b] = a;
                            next.insert(b);
                        }
                    seen |= next;
                    frontier = next;
                    found = next.contains(v);
                }
                if (! found)
                    continue;
                VertexSet cycle = VertexSet::singleton(u);
                for (int w = v ; w != u ; w = parent[w])
                    cycle.insert(w);
                if (! best || cycle.size() < best->size())
                    best = cycle;
            }
        return best;
    }

    auto find_long_cycle(const Graph & g, int length, VertexSet within) -> optional<VertexSet>
    {
        // the cycle is rooted at its smallest vertex
        for (int root : within) {
            VertexSet allowed = within - VertexSet::range(root + 1);
            VertexSet path = VertexSet::singleton(root);
            std::function<bool (int, int)> extend = [&] (int last, int depth) -> bool {
                if (depth == length)
                    return g.adjacent(last, root);
                for (int next : (g.neighbours(last) & allowed) - path) {
                    path.insert(next);
                    if (extend(next, depth + 1))
                        return true;
                    path.erase(next);
                }
                return false;
            };
            if (extend(root, 1))
                return path;
        }
        return std::nullopt;
    }

    auto find_clique(const Graph & g, int order, VertexSet within) -> optional<VertexSet>
    {
        VertexSet clique;
        std::function<bool (VertexSet)> extend = [&] (VertexSet candidates) -> bool {
            if (clique.size() == order)
                return true;
            if (clique.size() + candidates.size() < order)
                return false;
            for (int v : candidates) {
                clique.insert(v);
                if (extend(candidates & (g.neighbours(v) - VertexSet::range(v + 1))))
                    return true;
                clique.erase(v);
            }
            return false;
        };
        if (extend(within))
            return clique;
        return std::nullopt;
    }
}

FamilySpec::FamilySpec(Variant v) :
    _variant(std::move(v))
{
}

auto FamilySpec::single_cycle(int length) -> FamilySpec
{
    if (length < 1)
        throw GraphError{"cycle length must be at least 1"};
    return FamilySpec{SingleCycle{length}};
}

auto FamilySpec::all_cycles() -> FamilySpec
{
    return FamilySpec{AllCycles{}};
}

auto FamilySpec::clique(int order) -> FamilySpec
{
    if (order < 1)
        throw GraphError{"clique order must be at least 1"};
    return FamilySpec{Clique{order}};
}

auto FamilySpec::pattern_list(vector<Graph> patterns) -> FamilySpec
{
    if (patterns.empty())
        throw GraphError{"pattern list is empty"};
    for (auto & p : patterns)
        if (0 == p.size())
            throw GraphError{"pattern list contains the empty graph"};
    return FamilySpec{PatternList{std::move(patterns)}};
}

auto FamilySpec::is_cycle_family() const -> bool
{
    return std::visit(Overloaded{
            [] (const SingleCycle & c) { return c.length >= 3; },
            [] (const AllCycles &) { return true; },
            [] (const Clique & c) { return 3 == c.order; },
            [] (const PatternList & l) {
                return std::all_of(l.patterns.begin(), l.patterns.end(), [] (const Graph & p) {
                        if (p.size() < 3 || ! is_connected(p))
                            return false;
                        for (int v = 0 ; v < p.size() ; ++v)
                            if (2 != p.degree(v))
                                return false;
                        return true;
                    });
            }
            }, _variant);
}

auto FamilySpec::is_c4() const -> bool
{
    auto c = std::get_if<SingleCycle>(&_variant);
    return c && 4 == c->length;
}

auto FamilySpec::name() const -> string
{
    return std::visit(Overloaded{
            [] (const SingleCycle & c) { return 4 == c.length ? string{"c4"} : "ck:" + std::to_string(c.length); },
            [] (const AllCycles &) { return string{"cycles"}; },
            [] (const Clique & c) { return "clique:" + std::to_string(c.order); },
            [] (const PatternList & l) {
                if (1 == l.patterns.size() && l.patterns[0] == catalog::diamond())
                    return string{"diamond"};
                string result = "patterns(";
                for (std::size_t i = 0 ; i < l.patterns.size() ; ++i)
                    result += (i ? "," : "") + encode_graph6(l.patterns[i]);
                return result + ")";
            }
            }, _variant);
}

auto isolation::parse_family(string_view text) -> FamilySpec
{
    if (text == "c4")
        return FamilySpec::c4();
    if (text == "cycles")
        return FamilySpec::all_cycles();
    if (text == "diamond")
        return FamilySpec::pattern_list({catalog::diamond()});
    if (text == "k4")
        return FamilySpec::clique(4);
    if (text.starts_with("ck:"))
        return FamilySpec::single_cycle(parse_positive(text.substr(3), "cycle length"));
    if (text.starts_with("clique:"))
        return FamilySpec::clique(parse_positive(text.substr(7), "clique order"));
    throw FormatError{"unknown family '" + string{text} + "'"};
}

auto catalog::k1() -> const Graph &
{
    static const Graph g = complete(1);
    return g;
}

auto catalog::k2() -> const Graph &
{
    static const Graph g = complete(2);
    return g;
}

auto catalog::k3() -> const Graph &
{
    static const Graph g = complete(3);
    return g;
}

auto catalog::p3() -> const Graph &
{
    static const Graph g = path(3);
    return g;
}

auto catalog::c4() -> const Graph &
{
    static const Graph g = cycle(4);
    return g;
}

auto catalog::diamond() -> const Graph &
{
    static const Graph g = from_one_based(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
    return g;
}

auto catalog::k4() -> const Graph &
{
    static const Graph g = complete(4);
    return g;
}

auto catalog::g9(int index) -> const Graph &
{
    static const vector<Graph> graphs = make_g9();
    if (index < 1 || index > 6)
        throw GraphError{"exceptional 9-vertex graph index must be in [1, 6]"};
    return graphs[index - 1];
}

auto catalog::cycle(int length) -> Graph
{
    // C1 = K1, C2 = K2
    if (length <= 2)
        return complete(length);
    GraphBuilder builder(length);
    for (int i = 0 ; i < length ; ++i)
        builder.add_edge(i, (i + 1) % length);
    return builder.build();
}

auto catalog::path(int n) -> Graph
{
    GraphBuilder builder(n);
    for (int i = 0 ; i + 1 < n ; ++i)
        builder.add_edge(i, i + 1);
    return builder.build();
}

auto catalog::complete(int n) -> Graph
{
    GraphBuilder builder(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            builder.add_edge(u, v);
    return builder.build();
}

auto isolation::is_exceptional(const ExceptionalClass & c) -> bool
{
    return ! std::holds_alternative<NotExceptional>(c);
}

auto isolation::exceptional_isolation_number(const ExceptionalClass & c) -> int
{
    return std::visit(Overloaded{
            [] (const NotExceptional &) { return 0; },
            [] (const G4Member &) { return 1; },
            [] (const G9Member &) { return 2; }
            }, c);
}

auto isolation::to_string(const ExceptionalClass & c) -> string
{
    return std::visit(Overloaded{
            [] (const NotExceptional &) { return string{"None"}; },
            [] (const G4Member & m) {
                switch (m.kind) {
                    case SmallExceptional::c4:      return string{"G4Member(C4)"};
                    case SmallExceptional::diamond: return string{"G4Member(Diamond)"};
                    case SmallExceptional::k4:      return string{"G4Member(K4)"};
                }
                return string{"G4Member(?)"};
            },
            [] (const G9Member & m) { return "G9Member(" + std::to_string(m.index) + ")"; }
            }, c);
}

auto isolation::classify_exceptional(const Graph & g) -> ExceptionalClass
{
    if (4 == g.size()) {
        if (isomorphic(g, catalog::c4()))
            return G4Member{SmallExceptional::c4};
        if (isomorphic(g, catalog::diamond()))
            return G4Member{SmallExceptional::diamond};
        if (isomorphic(g, catalog::k4()))
            return G4Member{SmallExceptional::k4};
    }
    else if (9 == g.size() && g.min_degree() >= 3 && g.max_degree() == 4) {
        for (int i = 1 ; i <= 6 ; ++i)
            if (isomorphic(g, catalog::g9(i)))
                return G9Member{i};
    }
    return NotExceptional{};
}

auto isolation::find_pattern_copy(const Graph & g, const Graph & p, VertexSet within) -> optional<VertexSet>
{
    within &= g.vertices();
    if (p.size() > within.size())
        return std::nullopt;
    if (0 == p.size())
        return VertexSet{};

    auto degrees = degrees_within(g, within);
    auto order = matching_order(p);
    vector<int> image(p.size(), -1);
    VertexSet used;

    std::function<bool (std::size_t)> extend = [&] (std::size_t depth) -> bool {
        if (depth == order.size())
            return true;
        int pv = order[depth];
        VertexSet candidates = within - used;
        for (int pu : p.neighbours(pv))
            if (-1 != image[pu])
                candidates &= g.neighbours(image[pu]);
        for (int gv : candidates) {
            if (degrees[gv] < p.degree(pv))
                continue;
            image[pv] = gv;
            used.insert(gv);
            if (extend(depth + 1))
                return true;
            used.erase(gv);
            image[pv] = -1;
        }
        return false;
    };

    if (extend(0))
        return used;
    return std::nullopt;
}

auto isolation::contains_pattern(const Graph & g, const Graph & p) -> bool
{
    return find_pattern_copy(g, p, g.vertices()).has_value();
}

auto isolation::find_c4(const Graph & g, VertexSet within) -> optional<VertexSet>
{
    // a 4-cycle is two vertices with two common neighbours
    for (int u : within)
        for (int v : within - VertexSet::range(u + 1)) {
            VertexSet common = g.neighbours(u) & g.neighbours(v) & within;
            if (common.size() >= 2) {
                int a = common.first();
                common.erase(a);
                return VertexSet{u, v, a, common.first()};
            }
        }
    return std::nullopt;
}

auto isolation::contains_c4(const Graph & g, VertexSet within) -> bool
{
    for (int u : within)
        for (int v : within - VertexSet::range(u + 1))
            if ((g.neighbours(u) & g.neighbours(v) & within).size() >= 2)
                return true;
    return false;
}

auto isolation::find_copy(const Graph & g, const FamilySpec & f, VertexSet within) -> optional<VertexSet>
{
    within &= g.vertices();
    return std::visit(Overloaded{
            [&] (const SingleCycle & c) -> optional<VertexSet> {
                switch (c.length) {
                    case 1: return within.empty() ? optional<VertexSet>{} : VertexSet::singleton(within.first());
                    case 2: return find_clique(g, 2, within);
                    case 3: return find_clique(g, 3, within);
                    case 4: return find_c4(g, within);
                    default: return find_long_cycle(g, c.length, within);
                }
            },
            [&] (const AllCycles &) -> optional<VertexSet> {
                if (edge_count_within(g, within) + int(component_sets(g, within).size()) == within.size())
                    return std::nullopt;
                return find_shortest_cycle(g, within);
            },
            [&] (const Clique & c) -> optional<VertexSet> {
                return find_clique(g, c.order, within);
            },
            [&] (const PatternList & l) -> optional<VertexSet> {
                for (auto & p : l.patterns)
                    if (auto found = find_pattern_copy(g, p, within))
                        return found;
                return std::nullopt;
            }
            }, f.variant());
}

auto isolation::is_family_free(const Graph & g, const FamilySpec & f) -> bool
{
    return is_family_free_within(g, f, g.vertices());
}

auto isolation::is_family_free_within(const Graph & g, const FamilySpec & f, VertexSet within) -> bool
{
    if (f.is_c4())
        return ! contains_c4(g, within & g.vertices());
    return ! find_copy(g, f, within).has_value();
}
