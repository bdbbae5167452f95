/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/sweep.hh>
#include <isolation/graph6.hh>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

using namespace isolation;

namespace
{
    constexpr size_t chunk_size = 2048;

    struct IndexedViolator
    {
        size_t index;
        Violator violator;
    };

    struct WorkerResult
    {
        size_t passed = 0;
        vector<IndexedViolator> violators;
        optional<SweepError> error;
    };

    auto sweep_one(const string & record, size_t index, const FamilySpec & f, const SweepFilter & filter,
            const BoundRule & bound, const SearchOptions & search, WorkerResult & out) -> void
    {
        Graph g;
        try {
            g = parse_graph6(record);
        }
        catch (const std::exception & e) {
            throw SweepError{index, e.what()};
        }
        if (encode_graph6(g) != record)
            throw SweepError{index, "record does not re-encode to the same bytes"};

        if (! filter.accepts(g))
            return;
        ++out.passed;

        int b = bound.bound_for(g.size());
        if (find_isolating_set_within(g, f, b, search))
            return;
        out.violators.push_back(IndexedViolator{index, Violator{record, iota_exact(g, f, search).size, b}});
    }
}

SweepError::SweepError(size_t record, const string & message) noexcept :
    _record(record),
    _message("record " + std::to_string(record) + ": " + message)
{
}

auto SweepError::what() const noexcept -> const char *
{
    return _message.c_str();
}

auto SweepFilter::validate() const -> void
{
    if (min_degree && max_degree && *min_degree > *max_degree)
        throw GraphError{"minimum degree bound exceeds maximum degree bound"};
}

auto SweepFilter::accepts(const Graph & g) const -> bool
{
    if (vertex_count && g.size() != *vertex_count)
        return false;
    if (min_degree && g.size() > 0 && g.min_degree() < *min_degree)
        return false;
    if (max_degree && g.max_degree() > *max_degree)
        return false;
    if (require_connected && ! is_connected(g))
        return false;
    return true;
}

auto SweepFilter::describe() const -> string
{
    std::ostringstream out;
    out << "connected=" << (require_connected ? "yes" : "no");
    out << " min-degree=" << (min_degree ? std::to_string(*min_degree) : "any");
    out << " max-degree=" << (max_degree ? std::to_string(*max_degree) : "any");
    out << " vertices=" << (vertex_count ? std::to_string(*vertex_count) : "any");
    return out.str();
}

BoundRule::BoundRule(Kind kind, int value) :
    _kind(kind),
    _value(value)
{
}

auto BoundRule::floor_n_over(int divisor) -> BoundRule
{
    if (divisor < 1)
        throw GraphError{"bound divisor must be positive"};
    return BoundRule{Kind::floor_division, divisor};
}

auto BoundRule::fixed(int bound) -> BoundRule
{
    if (bound < 0)
        throw GraphError{"bound must be non-negative"};
    return BoundRule{Kind::fixed, bound};
}

auto BoundRule::bound_for(int n) const -> int
{
    return Kind::floor_division == _kind ? n / _value : _value;
}

auto BoundRule::describe() const -> string
{
    if (Kind::floor_division == _kind)
        return "floor(n/" + std::to_string(_value) + ")";
    return std::to_string(_value);
}

auto isolation::parse_bound_rule(string_view text) -> BoundRule
{
    auto number = [&] (string_view digits) {
        int value = 0;
        auto [end, error] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (error != std::errc{} || end != digits.data() + digits.size())
            throw FormatError{"bad bound '" + string{text} + "'"};
        return value;
    };

    if (text == "floor5")
        return BoundRule::floor_n_over(5);
    if (text.starts_with("floor:"))
        return BoundRule::floor_n_over(number(text.substr(6)));
    return BoundRule::fixed(number(text));
}

auto isolation::read_catalog(const std::filesystem::path & path) -> vector<string>
{
    std::ifstream in(path);
    if (! in)
        throw FormatError{"cannot read catalog " + path.string()};

    vector<string> result;
    string line;
    bool first_line = true;
    while (std::getline(in, line)) {
        if (! line.empty() && '\r' == line.back())
            line.pop_back();
        if (first_line && line.starts_with(">>graph6<<"))
            line.erase(0, 10);
        first_line = false;
        if (! line.empty())
            result.push_back(line);
    }
    return result;
}

auto isolation::sweep_records(std::span<const string> records, const FamilySpec & f, const SweepFilter & filter,
        const BoundRule & bound, const SweepOptions & options) -> SweepReport
{
    filter.validate();

    unsigned workers = std::max(1u, options.workers);
    vector<WorkerResult> results(workers);
    std::atomic<size_t> next_chunk{0};

    auto work = [&] (WorkerResult & out) {
        while (true) {
            size_t start = next_chunk.fetch_add(1) * chunk_size;
            if (start >= records.size())
                return;
            size_t end = std::min(records.size(), start + chunk_size);
            for (size_t i = start ; i < end ; ++i) {
                try {
                    sweep_one(records[i], i, f, filter, bound, options.search, out);
                }
                catch (const SweepError & e) {
                    if (! out.error || e.record() < out.error->record())
                        out.error = e;
                    return;
                }
                catch (const std::exception & e) {
                    SweepError wrapped{i, e.what()};
                    if (! out.error || i < out.error->record())
                        out.error = wrapped;
                    return;
                }
            }
        }
    };

    if (1 == workers)
        work(results[0]);
    else {
        vector<std::thread> threads;
        for (unsigned w = 0 ; w < workers ; ++w)
            threads.emplace_back(work, std::ref(results[w]));
        for (auto & t : threads)
            t.join();
    }

    optional<SweepError> first_error;
    for (auto & r : results)
        if (r.error && (! first_error || r.error->record() < first_error->record()))
            first_error = r.error;
    if (first_error)
        throw *first_error;

    SweepReport report{records.size(), 0, {}, f, filter, bound};
    vector<IndexedViolator> all;
    for (auto & r : results) {
        report.passed_filter += r.passed;
        all.insert(all.end(), r.violators.begin(), r.violators.end());
    }
    std::sort(all.begin(), all.end(), [] (const IndexedViolator & a, const IndexedViolator & b) {
            return std::tie(a.violator.graph6, a.index) < std::tie(b.violator.graph6, b.index);
        });
    for (auto & v : all)
        report.violators.push_back(v.violator);
    return report;
}

auto isolation::sweep_catalog(const std::filesystem::path & path, const FamilySpec & f, const SweepFilter & filter,
        const BoundRule & bound, const SweepOptions & options) -> SweepReport
{
    auto records = read_catalog(path);
    return sweep_records(records, f, filter, bound, options);
}

auto isolation::format_report(const SweepReport & report) -> string
{
    std::ostringstream out;
    out << "family: " << report.family.name() << "\n";
    out << "filter: " << report.filter.describe() << "\n";
    out << "bound: " << report.bound.describe() << "\n";
    out << "scanned: " << report.scanned << "\n";
    out << "passed-filter: " << report.passed_filter << "\n";
    out << "violators: " << report.violators.size() << "\n";
    for (auto & v : report.violators)
        out << v.graph6 << " iota=" << v.isolation_number << " bound=" << v.bound << "\n";
    return out.str();
}

auto isolation::same_up_to_isomorphism(const vector<Graph> & a, const vector<Graph> & b) -> bool
{
    if (a.size() != b.size())
        return false;
    vector<bool> used(b.size(), false);
    for (auto & g : a) {
        bool matched = false;
        for (size_t i = 0 ; i < b.size() && ! matched ; ++i)
            if (! used[i] && isomorphic(g, b[i])) {
                used[i] = true;
                matched = true;
            }
        if (! matched)
            return false;
    }
    return true;
}
