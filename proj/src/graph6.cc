/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/graph6.hh>

#include <sstream>
#include <vector>

using std::string;
using std::string_view;
using std::to_string;

using namespace isolation;

namespace
{
    constexpr int max_graph6_vertices = 62;

    auto packed_length(int n) -> std::size_t
    {
        std::size_t bits = std::size_t(n) * (n - 1) / 2;
        return (bits + 5) / 6;
    }
}

FormatError::FormatError(const string & message) noexcept :
    _message("Format error: " + message)
{
}

auto FormatError::what() const noexcept -> const char *
{
    return _message.c_str();
}

auto isolation::parse_graph6(string_view text) -> Graph
{
    if (text.empty())
        throw FormatError{"empty graph6 string"};

    for (std::size_t i = 0 ; i < text.size() ; ++i)
        if (text[i] < 63 || text[i] > 126)
            throw FormatError{"byte " + to_string(int(static_cast<unsigned char>(text[i]))) + " at offset "
                + to_string(i) + " is outside [63, 126]"};

    if (126 == text[0])
        throw FormatError{"multi-byte size header (n > 62) is not supported"};

    int n = text[0] - 63;
    auto expected = packed_length(n);
    if (text.size() - 1 < expected)
        throw FormatError{"truncated: " + to_string(n) + " vertices need " + to_string(expected)
            + " data bytes, got " + to_string(text.size() - 1)};
    if (text.size() - 1 > expected)
        throw FormatError{"trailing garbage after " + to_string(expected + 1) + " bytes"};

    GraphBuilder builder(n);
    std::size_t bit = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u, ++bit) {
            int value = text[1 + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1)
                builder.add_edge(u, v);
        }

    for ( ; bit < expected * 6 ; ++bit) {
        int value = text[1 + bit / 6] - 63;
        if ((value >> (5 - bit % 6)) & 1)
            throw FormatError{"non-zero padding bits"};
    }

    return builder.build();
}

auto isolation::encode_graph6(const Graph & g) -> string
{
    int n = g.size();
    if (n > max_graph6_vertices)
        throw FormatError{"graph6 single-byte header cannot encode " + to_string(n) + " vertices"};

    string result(1 + packed_length(n), char(63));
    result[0] = char(63 + n);
    std::size_t bit = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u, ++bit)
            if (g.adjacent(u, v))
                result[1 + bit / 6] = char(result[1 + bit / 6] + (1 << (5 - bit % 6)));
    return result;
}

auto isolation::parse_edge_list(string_view text) -> Graph
{
    std::istringstream in{string{text}};
    long n;
    if (! (in >> n))
        throw FormatError{"edge list must start with a vertex count"};
    if (n < 0 || n > max_vertices)
        throw FormatError{"vertex count " + to_string(n) + " outside [0, " + to_string(max_vertices) + "]"};

    std::vector<std::pair<int, int> > edges;
    long u, v;
    while (in >> u) {
        if (! (in >> v))
            throw FormatError{"edge list has a dangling endpoint"};
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError{"edge (" + to_string(u) + ", " + to_string(v) + ") out of range"};
        edges.emplace_back(int(u), int(v));
    }
    if (! in.eof())
        throw FormatError{"unexpected token in edge list"};

    try {
        return Graph::from_edges(int(n), edges);
    }
    catch (const GraphError & e) {
        throw FormatError{e.what()};
    }
}

auto isolation::format_edge_list(const Graph & g) -> string
{
    std::ostringstream out;
    out << g.size() << "\n";
    for (auto & [u, v] : g.edges())
        out << u << " " << v << "\n";
    return out.str();
}
