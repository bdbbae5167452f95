/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/isolation.hh>

#include <functional>
#include <stdexcept>

using std::optional;
using std::string;
using std::uint64_t;

using namespace isolation;

namespace
{
    struct NodeCounter
    {
        uint64_t budget, used = 0;

        auto tick() -> void
        {
            if (++used > budget)
                throw BudgetExceeded{budget};
        }
    };

    auto require_cycle_family(const FamilySpec & f) -> void
    {
        if (! f.is_cycle_family())
            throw PreconditionError{"family " + f.name() + " is not a set of cycles"};
    }

    /**
     * Bounded search tree: some F-graph in the residual must meet N[z] for a chosen z, so branch on
     * every z in the closed neighbourhood of that copy. Calls on_solution for each isolating set of
     * size at most depth_left found this way; stops early when on_solution returns true.
     */
    auto branch(const Graph & g, const FamilySpec & f, VertexSet chosen, VertexSet rest, int depth_left,
            NodeCounter & counter, const std::function<bool (VertexSet)> & on_solution) -> bool
    {
        counter.tick();
        auto copy = find_copy(g, f, rest);
        if (! copy)
            return on_solution(chosen);
        if (0 == depth_left)
            return false;

        for (int z : closed_neighbourhood(g, *copy)) {
            if (branch(g, f, chosen | VertexSet::singleton(z), rest - g.closed_neighbourhood(z), depth_left - 1,
                        counter, on_solution))
                return true;
        }
        return false;
    }

    auto exists_within(const Graph & g, const FamilySpec & f, int size, NodeCounter & counter) -> optional<VertexSet>
    {
        optional<VertexSet> found;
        branch(g, f, VertexSet{}, g.vertices(), size, counter, [&] (VertexSet d) {
                found = d;
                return true;
            });
        return found;
    }

    // Lexicographically first isolating set among those of exactly the minimum size.
    auto first_minimum_witness(const Graph & g, const FamilySpec & f, int size, NodeCounter & counter) -> VertexSet
    {
        optional<VertexSet> best;
        branch(g, f, VertexSet{}, g.vertices(), size, counter, [&] (VertexSet d) {
                if (d.size() == size && (! best || d.lex_less(*best)))
                    best = d;
                return false;
            });
        if (! best)
            throw std::logic_error{"no isolating set at the minimum size"};
        return *best;
    }

    auto component_minimum(const Graph & c, const FamilySpec & f, NodeCounter & counter) -> VertexSet
    {
        if (is_family_free(c, f))
            return VertexSet{};

        Graph reduced = f.is_cycle_family() ? strip_pendant_blocks(c, f).graph : c;
        int size = 1;
        while (! exists_within(reduced, f, size, counter))
            ++size;
        return first_minimum_witness(c, f, size, counter);
    }
}

BudgetExceeded::BudgetExceeded(uint64_t budget) noexcept :
    _message("search budget of " + std::to_string(budget) + " nodes exceeded")
{
}

auto BudgetExceeded::what() const noexcept -> const char *
{
    return _message.c_str();
}

PreconditionError::PreconditionError(const string & message) noexcept :
    _message("Precondition violated: " + message)
{
}

auto PreconditionError::what() const noexcept -> const char *
{
    return _message.c_str();
}

auto isolation::make_certificate(const Graph & g, const FamilySpec & f, VertexSet d) -> IsolatingCertificate
{
    IsolatingCertificate result;
    result.family = f;
    result.set = d;
    result.size = d.size();
    result.verified = is_isolating(g, f, d);
    result.bound = g.size() / 5;
    result.within_bound = result.size <= result.bound;
    return result;
}

auto isolation::residual(const Graph & g, VertexSet d) -> VertexSet
{
    return g.vertices() - closed_neighbourhood(g, d);
}

auto isolation::is_isolating(const Graph & g, const FamilySpec & f, VertexSet d) -> bool
{
    if (! d.is_subset_of(g.vertices()))
        throw GraphError{"vertex set " + d.to_string() + " is not within the graph"};
    return is_family_free_within(g, f, residual(g, d));
}

auto isolation::iota_exact(const Graph & g, const FamilySpec & f, const SearchOptions & options) -> IsolatingCertificate
{
    NodeCounter counter{options.node_budget};
    VertexSet witness;
    for (auto & c : components(g))
        witness |= c.lift(component_minimum(c.graph, f, counter));
    return make_certificate(g, f, witness);
}

auto isolation::find_isolating_set_within(const Graph & g, const FamilySpec & f, int max_size,
        const SearchOptions & options) -> optional<VertexSet>
{
    if (max_size < 0)
        return std::nullopt;
    NodeCounter counter{options.node_budget};
    return exists_within(g, f, max_size, counter);
}

auto isolation::extend_isolating_set(const Graph & g, const FamilySpec & f, VertexSet x, VertexSet y, VertexSet d_rest) -> VertexSet
{
    if (! x.is_subset_of(g.vertices()))
        throw PreconditionError{"X is not within the graph"};
    if (! y.is_subset_of(closed_neighbourhood(g, x)))
        throw PreconditionError{"Y = " + y.to_string() + " is not inside N[X]"};

    auto rest = delete_vertices(g, y);
    if (! d_rest.is_subset_of(rest.graph.vertices()))
        throw PreconditionError{"d_rest is not within G - Y"};
    if (! is_isolating(rest.graph, f, d_rest))
        throw PreconditionError{"d_rest does not isolate G - Y"};

    VertexSet result = x | rest.lift(d_rest);
    if (! is_isolating(g, f, result) || result.size() > x.size() + d_rest.size())
        throw std::logic_error{"composed set does not isolate G"};
    return result;
}

auto isolation::reduce_pendant(const Graph & g, const FamilySpec & f, int x, VertexSet y) -> InducedSubgraph
{
    require_cycle_family(f);
    if (x < 0 || x >= g.size())
        throw PreconditionError{"x is not a vertex"};
    if (! y.is_subset_of(g.vertices()))
        throw PreconditionError{"Y is not within the graph"};
    if (y.contains(x))
        throw PreconditionError{"x lies in Y"};
    VertexSet outside = closed_neighbourhood(g, y) - y;
    if (! outside.is_subset_of(VertexSet::singleton(x)))
        throw PreconditionError{"Y has neighbours " + outside.to_string() + " other than x"};
    if (! is_family_free_within(g, f, y | VertexSet::singleton(x)))
        throw PreconditionError{"G[{x} + Y] contains an F-graph"};
    return delete_vertices(g, y);
}

auto isolation::strip_leaves(const Graph & g, const FamilySpec & f) -> InducedSubgraph
{
    require_cycle_family(f);
    VertexSet current = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : current)
            if ((g.neighbours(v) & current).size() <= 1) {
                current.erase(v);
                changed = true;
            }
    }
    return induced_subgraph(g, current);
}

auto isolation::strip_pendant_blocks(const Graph & g, const FamilySpec & f) -> InducedSubgraph
{
    require_cycle_family(f);
    VertexSet current = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : current) {
            for (auto & block : component_sets(g, current - VertexSet::singleton(x)))
                if (is_family_free_within(g, f, block | VertexSet::singleton(x))) {
                    current -= block;
                    changed = true;
                }
            if (changed)
                break;
        }
    }
    return induced_subgraph(g, current);
}
