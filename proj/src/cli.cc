/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/cli.hh>
#include <isolation/constructive.hh>
#include <isolation/extremal.hh>
#include <isolation/graph.hh>
#include <isolation/graph6.hh>
#include <isolation/isolation.hh>
#include <isolation/patterns.hh>
#include <isolation/sweep.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

using std::istream;
using std::optional;
using std::ostream;
using std::string;
using std::vector;

using namespace isolation;

namespace
{
    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct GraphInput
    {
        string inline_graph;
        string file;

        auto attach(CLI::App & app) -> void
        {
            app.add_option("graph", inline_graph, "graph6 string (otherwise --input or standard input)");
            app.add_option("-i,--input", file, "file holding one graph, graph6 or edge list");
        }

        auto read(istream & in) const -> Graph
        {
            string text;
            if (! inline_graph.empty())
                text = inline_graph;
            else if (! file.empty()) {
                std::ifstream f(file);
                if (! f)
                    throw FormatError{"cannot read " + file};
                text.assign(std::istreambuf_iterator<char>{f}, {});
            }
            else
                text.assign(std::istreambuf_iterator<char>{in}, {});

            auto begin = text.find_first_not_of(" \t\r\n");
            if (string::npos == begin)
                throw FormatError{"no graph given"};
            auto end = text.find_last_not_of(" \t\r\n");
            text = text.substr(begin, end - begin + 1);

            // graph6 bytes start at '?', so a leading digit means an edge list
            if (std::isdigit(static_cast<unsigned char>(text.front())))
                return parse_edge_list(text);
            if (text.starts_with(">>graph6<<"))
                text.erase(0, 10);
            return parse_graph6(text);
        }
    };

    auto join(VertexSet s) -> string
    {
        string result;
        for (int v : s)
            result += (result.empty() ? "" : " ") + std::to_string(v);
        return result;
    }

    auto join(const vector<int> & values) -> string
    {
        string result;
        for (int v : values)
            result += (result.empty() ? "" : ",") + std::to_string(v);
        return result;
    }

    auto pattern_by_name(const string & name) -> Graph
    {
        if (name == "c4")
            return catalog::c4();
        if (name == "c3")
            return catalog::k3();
        if (name == "diamond")
            return catalog::diamond();
        if (name.size() > 1 && 'k' == name[0] && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
            int k = std::stoi(name.substr(1));
            if (k < 1 || k > max_vertices)
                throw UsageError{"pattern order out of range: " + name};
            return catalog::complete(k);
        }
        throw UsageError{"unknown pattern '" + name + "' (expected c4, c3, diamond or k<k>)"};
    }

    auto family_by_name(const string & name) -> FamilySpec
    {
        try {
            return parse_family(name);
        }
        catch (const std::exception & e) {
            throw UsageError{e.what()};
        }
    }

    auto print_trace(ostream & out, const ConstructiveTrace & trace) -> void
    {
        for (auto & s : trace.steps)
            out << "trace: depth=" << s.depth << " rule=" << s.rule << " chosen=" << s.chosen.to_string()
                << " targets=" << join(s.targets) << "\n";
    }

    struct Tally
    {
        int passed = 0, total = 0;

        auto check(bool ok) -> void
        {
            ++total;
            if (ok)
                ++passed;
        }
    };

    auto selftest(ostream & out) -> bool
    {
        const auto square = FamilySpec::c4();
        bool all = true;
        auto report = [&] (const string & name, const Tally & t) {
            out << name << ": " << t.passed << "/" << t.total << (t.passed == t.total ? " pass" : " FAIL") << "\n";
            all = all && t.passed == t.total;
        };

        Tally small;
        for (auto * g : { &catalog::c4(), &catalog::diamond(), &catalog::k4() })
            small.check(1 == iota_exact(*g, square).size);
        report("small-exceptional-values", small);

        Tally nine;
        for (int i = 1 ; i <= 6 ; ++i)
            nine.check(2 == iota_exact(catalog::g9(i), square).size);
        report("nine-vertex-exceptional-values", nine);

        Tally profile;
        for (int i = 1 ; i <= 6 ; ++i) {
            auto & g = catalog::g9(i);
            bool regular = g.min_degree() == g.max_degree();
            profile.check(g.min_degree() >= 3 && 4 == g.max_degree() && (i <= 4) == regular);
        }
        report("degree-profile", profile);

        Tally cubic;
        for (int i = 5 ; i <= 6 ; ++i) {
            auto & g = catalog::g9(i);
            bool independent = true;
            for (auto [u, v] : g.edges())
                if (3 == g.degree(u) && 3 == g.degree(v))
                    independent = false;
            cubic.check(independent);
        }
        report("degree-3-independence", cubic);

        Tally witnesses;
        for (int i = 1 ; i <= 6 ; ++i) {
            auto & g = catalog::g9(i);
            for (int v = 0 ; v < g.size() ; ++v) {
                bool ok = false;
                try {
                    int w = g9_witness(g, v);
                    VertexSet rest = g.vertices() - VertexSet::singleton(v) - g.closed_neighbourhood(w);
                    ok = w != v && 3 == rest.size() && is_connected(induced_subgraph(g, rest).graph);
                }
                catch (const std::exception &) {
                }
                witnesses.check(ok);
            }
        }
        report("witness-vertices", witnesses);

        Tally extremal;
        for (int n = 1 ; n <= 20 ; ++n)
            extremal.check(verify_extremal(n));
        report("extremal", extremal);

        out << "selftest: " << (all ? "pass" : "FAIL") << "\n";
        return all;
    }
}

auto isolation::run(const vector<string> & args, istream & in, ostream & out, ostream & err) -> int
{
    CLI::App app{"C4-isolation toolkit", "isolation"};
    app.require_subcommand(1);

    std::uint64_t budget = SearchOptions{}.node_budget;

    auto iota = app.add_subcommand("iota", "minimum F-isolating set");
    GraphInput iota_input;
    string iota_family = "c4";
    iota_input.attach(*iota);
    iota->add_option("-f,--family", iota_family, "c4, cycles, diamond, k4, ck:<k> or clique:<k>");
    iota->add_option("--budget", budget, "search node budget");

    auto isolate = app.add_subcommand("isolate", "C4-isolating set within floor(n/5)");
    GraphInput isolate_input;
    bool trace = false, any = false;
    isolate_input.attach(*isolate);
    isolate->add_flag("--trace", trace, "print the recursion steps");
    isolate->add_flag("--any", any, "accept disconnected or exceptional input, component by component");

    auto sweep = app.add_subcommand("sweep", "scan a graph6 catalog for bound violators");
    string catalog_path, sweep_family = "c4", bound_text = "floor5", expect_path;
    optional<int> min_degree = 2, max_degree = 4, vertex_count;
    bool connected = true, unfiltered = false;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    sweep->add_option("-c,--catalog", catalog_path, "graph6 catalog, one graph per line")->required();
    sweep->add_option("-f,--family", sweep_family, "family to isolate");
    sweep->add_option("--min-deg", min_degree, "minimum degree filter (default 2)");
    sweep->add_option("--max-deg", max_degree, "maximum degree filter (default 4)");
    sweep->add_option("--vertices", vertex_count, "vertex count filter");
    sweep->add_flag("--connected,!--any-connectivity", connected, "only connected graphs (default)");
    sweep->add_flag("--unfiltered", unfiltered, "drop the degree filters");
    sweep->add_option("--bound", bound_text, "floor5, floor:<d> or an integer");
    sweep->add_option("-w,--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
    sweep->add_option("--expect", expect_path, "graph6 file of the expected violators, compared up to isomorphism");
    sweep->add_option("--budget", budget, "search node budget per graph");

    auto construct = app.add_subcommand("construct-b", "extremal graph, as graph6");
    int construct_n = 0;
    string pattern_name = "c4";
    bool as_edges = false;
    construct->add_option("-n,--n", construct_n, "vertex count")->required();
    construct->add_option("-p,--pattern", pattern_name, "c4, c3, diamond or k<k>");
    construct->add_flag("--edges", as_edges, "emit an edge list instead");

    auto classify = app.add_subcommand("classify", "exceptional class of a graph");
    GraphInput classify_input;
    classify_input.attach(*classify);

    auto self = app.add_subcommand("selftest", "exceptional-graph facts and extremal checks");

    try {
        vector<string> reversed{args.rbegin(), args.rend()};
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return 0 == code ? exit_code::success : exit_code::usage_error;
    }

    try {
        SearchOptions search{budget};

        if (iota->parsed()) {
            auto f = family_by_name(iota_family);
            auto g = iota_input.read(in);
            auto cert = iota_exact(g, f, search);
            out << "family: " << f.name() << "\n";
            out << "n: " << g.size() << "\n";
            out << "size: " << cert.size << "\n";
            out << "witness: " << join(cert.set) << "\n";
        }
        else if (isolate->parsed()) {
            auto g = isolate_input.read(in);
            IsolatingCertificate cert;
            ConstructiveTrace steps;
            vector<VertexSet> over;
            if (any) {
                auto r = isolate_c4_any(g);
                cert = r.certificate;
                steps = r.trace;
                over = r.over_bound_components;
            }
            else {
                auto r = isolate_c4(g);
                cert = r.certificate;
                steps = r.trace;
            }
            out << "n: " << g.size() << "\n";
            out << "size: " << cert.size << "\n";
            out << "bound: " << cert.bound << "\n";
            out << "witness: " << join(cert.set) << "\n";
            for (auto & c : over)
                out << "over-bound-component: " << join(c) << "\n";
            if (trace)
                print_trace(out, steps);
        }
        else if (sweep->parsed()) {
            SweepFilter filter;
            filter.require_connected = connected;
            filter.vertex_count = vertex_count;
            if (! unfiltered) {
                filter.min_degree = min_degree;
                filter.max_degree = max_degree;
            }
            try {
                filter.validate();
            }
            catch (const GraphError & e) {
                throw UsageError{e.what()};
            }

            auto f = family_by_name(sweep_family);
            optional<BoundRule> bound;
            try {
                bound = parse_bound_rule(bound_text);
            }
            catch (const std::exception & e) {
                throw UsageError{e.what()};
            }

            auto report = sweep_catalog(catalog_path, f, filter, *bound, SweepOptions{workers, search});
            out << format_report(report);

            if (! expect_path.empty()) {
                vector<Graph> expected, found;
                for (auto & r : read_catalog(expect_path))
                    expected.push_back(parse_graph6(r));
                for (auto & v : report.violators)
                    found.push_back(parse_graph6(v.graph6));
                bool match = same_up_to_isomorphism(found, expected);
                out << "expect: " << (match ? "match" : "mismatch") << "\n";
                if (! match)
                    return exit_code::domain_error;
            }
        }
        else if (construct->parsed()) {
            auto pattern = pattern_by_name(pattern_name);
            auto g = build_extremal(construct_n, pattern);
            out << (as_edges ? format_edge_list(g) : encode_graph6(g) + "\n");
        }
        else if (classify->parsed()) {
            auto g = classify_input.read(in);
            out << to_string(classify_exceptional(g)) << "\n";
        }
        else if (self->parsed()) {
            if (! selftest(out))
                return exit_code::domain_error;
        }
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage_error;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_code::domain_error;
    }

    return exit_code::success;
}
