/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/constructive.hh>

#include <algorithm>
#include <optional>
#include <stdexcept>

using std::optional;
using std::string;
using std::vector;

using namespace isolation;

namespace
{
    const FamilySpec & square()
    {
        static const FamilySpec f = FamilySpec::c4();
        return f;
    }

    // Pieces with at most this many vertices are always solved exactly.
    constexpr int small_piece = 9;

    // Closed neighbourhoods larger than this only try Y = N[u] in the local move search.
    constexpr int max_subset_neighbourhood = 8;

    struct PiecePlan
    {
        VertexSet vertices;
        bool strip = false;
        int cost = 0;
    };

    class Constructor
    {
        private:
            ConstructiveTrace & _trace;

            auto record(const string & rule, VertexSet chosen, const vector<int> & labels,
                    vector<int> targets, int depth) -> void
            {
                VertexSet original;
                for (int v : chosen)
                    original.insert(labels[v]);
                _trace.steps.push_back(TraceStep{rule, original, std::move(targets), depth});
            }

            static auto compose(const vector<int> & labels, const InducedSubgraph & sub) -> vector<int>
            {
                vector<int> result;
                for (int v : sub.to_parent)
                    result.push_back(labels[v]);
                return result;
            }

            static auto piece_cost(const Graph & g) -> int
            {
                if (! contains_c4(g, g.vertices()))
                    return 0;
                if (g.size() <= small_piece)
                    return iota_exact(g, square()).size;
                return g.size() / 5;
            }

            static auto plan(const Graph & g, VertexSet piece) -> PiecePlan
            {
                auto sub = induced_subgraph(g, piece);
                PiecePlan result{piece, false, piece_cost(sub.graph)};
                if (result.cost > 0) {
                    auto stripped = strip_pendant_blocks(sub.graph, square());
                    if (stripped.graph.size() < sub.graph.size()) {
                        int cost = piece_cost(stripped.graph);
                        if (cost < result.cost) {
                            result.strip = true;
                            result.cost = cost;
                        }
                    }
                }
                return result;
            }

            // A connected piece; >9 vertices means it is not exceptional.
            auto solve_piece(const Graph & g, const vector<int> & labels, int depth) -> VertexSet
            {
                if (! contains_c4(g, g.vertices()))
                    return VertexSet{};
                if (g.size() <= small_piece) {
                    auto d = iota_exact(g, square()).set;
                    record(is_exceptional(classify_exceptional(g)) ? "exceptional" : "exact", d, labels, {}, depth);
                    return d;
                }
                return solve(g, labels, depth);
            }

            auto realise(const Graph & g, const vector<int> & labels, const PiecePlan & p, int depth) -> VertexSet
            {
                auto sub = induced_subgraph(g, p.vertices);
                if (p.strip) {
                    auto stripped = strip_pendant_blocks(sub.graph, square());
                    auto local = solve_piece(stripped.graph, compose(compose(labels, sub), stripped), depth);
                    return sub.lift(stripped.lift(local));
                }
                return sub.lift(solve_piece(sub.graph, compose(labels, sub), depth));
            }

            static auto sizes(const vector<PiecePlan> & plans) -> vector<int>
            {
                vector<int> result;
                for (auto & p : plans)
                    result.push_back(p.vertices.size());
                return result;
            }

            auto realise_all(const Graph & g, const vector<int> & labels, const vector<PiecePlan> & plans, int depth) -> VertexSet
            {
                VertexSet result;
                for (auto & p : plans)
                    result |= realise(g, labels, p, depth);
                return result;
            }

            static auto pivot(const Graph & g) -> int
            {
                int best = 0;
                for (int v = 1 ; v < g.size() ; ++v)
                    if (g.degree(v) > g.degree(best))
                        best = v;
                if (g.degree(best) >= 4)
                    return best;

                // subcubic: a vertex of some 4-cycle with a neighbour off that cycle
                auto square_vertices = *find_c4(g, g.vertices());
                for (int v : square_vertices)
                    if (! g.neighbours(v).is_subset_of(square_vertices))
                        return v;
                return square_vertices.first();
            }

            // Extra vertices needed inside an exceptional component H once its vertex y is dominated.
            static auto inside_exceptional(const Graph & g, VertexSet h, int y) -> VertexSet
            {
                auto sub = induced_subgraph(g, h);
                if (! std::holds_alternative<G9Member>(classify_exceptional(sub.graph)))
                    return VertexSet{};
                int local_y = int(std::find(sub.to_parent.begin(), sub.to_parent.end(), y) - sub.to_parent.begin());
                return VertexSet::singleton(sub.to_parent[g9_witness(sub.graph, local_y)]);
            }

            struct Neighbourhood
            {
                int v;
                vector<VertexSet> exceptional, ordinary;
                vector<PiecePlan> ordinary_plans;
            };

            auto try_pivot(const Graph & g, const vector<int> & labels, int depth, const Neighbourhood & nb) -> optional<VertexSet>
            {
                int v = nb.v;
                auto link = [&] (int x, VertexSet h) { return g.neighbours(x) & h; };
                auto linked_to = [&] (VertexSet h) {
                    VertexSet result;
                    for (int x : g.neighbours(v))
                        if (! link(x, h).empty())
                            result.insert(x);
                    return result;
                };

                if (nb.exceptional.empty()) {
                    auto start = _trace.steps.size();
                    record("pivot", VertexSet::singleton(v), labels, sizes(nb.ordinary_plans), depth);
                    VertexSet d = VertexSet::singleton(v) | realise_all(g, labels, nb.ordinary_plans, depth + 1);
                    if (d.size() <= g.size() / 5 && is_isolating(g, square(), d))
                        return d;
                    _trace.steps.resize(start);
                    return std::nullopt;
                }

                // some neighbour of v linked to two exceptional components
                for (int x : g.neighbours(v)) {
                    int shared = 0;
                    for (auto & h : nb.exceptional)
                        if (! link(x, h).empty())
                            ++shared;
                    if (shared < 2)
                        continue;

                    VertexSet chosen = VertexSet{v, x};
                    for (auto & h : nb.exceptional) {
                        if (! link(x, h).empty())
                            chosen |= inside_exceptional(g, h, link(x, h).first());
                        else {
                            int xh = linked_to(h).first();
                            chosen.insert(xh);
                            chosen |= inside_exceptional(g, h, link(xh, h).first());
                        }
                    }
                    auto start = _trace.steps.size();
                    record("shared-link", chosen, labels, sizes(nb.ordinary_plans), depth);
                    VertexSet d = chosen | realise_all(g, labels, nb.ordinary_plans, depth + 1);
                    if (d.size() <= g.size() / 5 && is_isolating(g, square(), d))
                        return d;
                    _trace.steps.resize(start);
                    return std::nullopt;
                }

                // each neighbour of v is linked to at most one exceptional component
                VertexSet link_vertices;
                vector<int> link_of;
                for (auto & h : nb.exceptional) {
                    link_of.push_back(linked_to(h).first());
                    link_vertices.insert(link_of.back());
                }

                if ((g.neighbours(v) - link_vertices).size() >= 4) {
                    VertexSet chosen = VertexSet::singleton(v) | link_vertices;
                    for (std::size_t i = 0 ; i < nb.exceptional.size() ; ++i)
                        chosen |= inside_exceptional(g, nb.exceptional[i], link(link_of[i], nb.exceptional[i]).first());
                    auto start = _trace.steps.size();
                    record("wide-pivot", chosen, labels, sizes(nb.ordinary_plans), depth);
                    VertexSet d = chosen | realise_all(g, labels, nb.ordinary_plans, depth + 1);
                    if (d.size() <= g.size() / 5 && is_isolating(g, square(), d))
                        return d;
                    _trace.steps.resize(start);
                }

                for (std::size_t i = 0 ; i < nb.exceptional.size() ; ++i) {
                    auto & h = nb.exceptional[i];
                    if (1 != linked_to(h).size())
                        continue;

                    int xh = link_of[i];
                    VertexSet chosen = VertexSet::singleton(xh) | inside_exceptional(g, h, link(xh, h).first());
                    VertexSet rest = g.vertices() - h - VertexSet::singleton(xh);
                    vector<PiecePlan> others;
                    optional<VertexSet> with_v;
                    for (auto & c : component_sets(g, rest)) {
                        if (c.contains(v))
                            with_v = c;
                        else
                            others.push_back(plan(g, c));
                    }

                    vector<PiecePlan> plans = others;
                    if (with_v) {
                        auto sub = induced_subgraph(g, *with_v);
                        auto cls = classify_exceptional(sub.graph);
                        if (std::holds_alternative<G9Member>(cls)) {
                            int local_v = int(std::find(sub.to_parent.begin(), sub.to_parent.end(), v) - sub.to_parent.begin());
                            chosen.insert(sub.to_parent[g9_witness(sub.graph, local_v)]);
                        }
                        else if (! is_exceptional(cls))
                            plans.push_back(plan(g, *with_v));
                    }

                    auto start = _trace.steps.size();
                    record("single-link", chosen, labels, sizes(plans), depth);
                    VertexSet d = chosen | realise_all(g, labels, plans, depth + 1);
                    if (d.size() <= g.size() / 5 && is_isolating(g, square(), d))
                        return d;
                    _trace.steps.resize(start);
                    break;
                }

                return std::nullopt;
            }

            // One vertex u goes into the set and some Y inside N[u] is deleted.
            auto try_local_moves(const Graph & g, const vector<int> & labels, int depth) -> optional<VertexSet>
            {
                int bound = g.size() / 5;
                vector<int> order = g.vertices().to_vector();
                std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

                for (int u : order) {
                    auto closed = g.closed_neighbourhood(u).to_vector();
                    vector<VertexSet> removals;
                    if (int(closed.size()) > max_subset_neighbourhood)
                        removals.push_back(g.closed_neighbourhood(u));
                    else {
                        for (std::uint64_t mask = 1 ; mask < (std::uint64_t{1} << closed.size()) ; ++mask) {
                            VertexSet y;
                            for (std::size_t i = 0 ; i < closed.size() ; ++i)
                                if ((mask >> i) & 1)
                                    y.insert(closed[i]);
                            removals.push_back(y);
                        }
                        std::stable_sort(removals.begin(), removals.end(), [] (VertexSet a, VertexSet b) {
                                return a.size() > b.size();
                            });
                    }

                    for (auto & y : removals) {
                        vector<PiecePlan> plans;
                        int cost = 1;
                        for (auto & c : component_sets(g, g.vertices() - y)) {
                            plans.push_back(plan(g, c));
                            cost += plans.back().cost;
                            if (cost > bound)
                                break;
                        }
                        if (cost > bound)
                            continue;

                        auto start = _trace.steps.size();
                        record("local-move", VertexSet::singleton(u), labels, sizes(plans), depth);
                        VertexSet d = VertexSet::singleton(u) | realise_all(g, labels, plans, depth + 1);
                        if (d.size() <= bound && is_isolating(g, square(), d))
                            return d;
                        _trace.steps.resize(start);
                    }
                }
                return std::nullopt;
            }

        public:
            explicit Constructor(ConstructiveTrace & trace) :
                _trace(trace)
            {
            }

            // g connected with more than 9 vertices, or small and not exceptional.
            auto solve(const Graph & g, const vector<int> & labels, int depth) -> VertexSet
            {
                if (! contains_c4(g, g.vertices())) {
                    record("c4-free", VertexSet{}, labels, {}, depth);
                    return VertexSet{};
                }
                if (g.size() <= small_piece) {
                    auto d = iota_exact(g, square()).set;
                    record("exact", d, labels, {}, depth);
                    return d;
                }

                Neighbourhood nb{pivot(g), {}, {}, {}};
                for (auto & h : component_sets(g, g.vertices() - g.closed_neighbourhood(nb.v))) {
                    if (is_exceptional(classify_exceptional(induced_subgraph(g, h).graph)))
                        nb.exceptional.push_back(h);
                    else {
                        nb.ordinary.push_back(h);
                        nb.ordinary_plans.push_back(plan(g, h));
                    }
                }

                if (auto d = try_pivot(g, labels, depth, nb))
                    return *d;
                if (auto d = try_local_moves(g, labels, depth))
                    return *d;

                auto exact = iota_exact(g, square());
                if (exact.size > g.size() / 5)
                    throw std::logic_error{"no C4-isolating set within floor(n/5) found for a non-exceptional graph"};
                record("fallback-exact", exact.set, labels, {}, depth);
                return exact.set;
            }
    };

    auto identity_labels(int n) -> vector<int>
    {
        vector<int> result(n);
        for (int v = 0 ; v < n ; ++v)
            result[v] = v;
        return result;
    }
}

auto NotConnected::what() const noexcept -> const char *
{
    return "input graph is not connected";
}

ExceptionalInput::ExceptionalInput(ExceptionalClass c) noexcept :
    _class(c),
    _message("input graph is exceptional: " + to_string(c))
{
}

auto ExceptionalInput::what() const noexcept -> const char *
{
    return _message.c_str();
}

auto ConstructiveTrace::replay() const -> VertexSet
{
    VertexSet result;
    for (auto & s : steps)
        result |= s.chosen;
    return result;
}

auto isolation::isolate_c4(const Graph & g) -> ConstructiveResult
{
    if (! is_connected(g))
        throw NotConnected{};
    if (auto c = classify_exceptional(g) ; is_exceptional(c))
        throw ExceptionalInput{c};

    ConstructiveResult result{IsolatingCertificate{}, {}};
    Constructor constructor(result.trace);
    VertexSet d = constructor.solve(g, identity_labels(g.size()), 0);
    result.certificate = make_certificate(g, square(), d);
    if (! result.certificate.verified || ! result.certificate.within_bound)
        throw std::logic_error{"constructed set failed verification"};
    return result;
}

auto isolation::isolate_c4_any(const Graph & g) -> ComponentwiseResult
{
    ComponentwiseResult result{IsolatingCertificate{}, {}, {}};
    VertexSet d;
    for (auto & c : components(g)) {
        VertexSet vertices = c.lift(c.graph.vertices());
        if (is_exceptional(classify_exceptional(c.graph))) {
            VertexSet local = iota_exact(c.graph, square()).set;
            d |= c.lift(local);
            result.over_bound_components.push_back(vertices);
            result.trace.steps.push_back(TraceStep{"exceptional", c.lift(local), {}, 0});
            continue;
        }
        auto sub = isolate_c4(c.graph);
        d |= c.lift(sub.certificate.set);
        for (auto & s : sub.trace.steps)
            result.trace.steps.push_back(TraceStep{s.rule, c.lift(s.chosen), s.targets, s.depth});
    }
    result.certificate = make_certificate(g, square(), d);
    if (! result.certificate.verified)
        throw std::logic_error{"constructed set failed verification"};
    return result;
}

auto isolation::g9_witness(const Graph & g, int v) -> int
{
    if (! std::holds_alternative<G9Member>(classify_exceptional(g)))
        throw PreconditionError{"graph is not one of the exceptional 9-vertex graphs"};
    if (v < 0 || v >= g.size())
        throw PreconditionError{"vertex out of range"};

    for (int w = 0 ; w < g.size() ; ++w) {
        if (w == v)
            continue;
        VertexSet rest = g.vertices() - VertexSet::singleton(v) - g.closed_neighbourhood(w);
        if (3 == rest.size() && 1 == component_sets(g, rest).size())
            return w;
    }
    throw std::logic_error{"exceptional graph catalogue is corrupt: no witness vertex"};
}
