/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_GRAPH6_HH
#define ISOLATION_GUARD_GRAPH6_HH 1

#include <isolation/graph.hh>

#include <exception>
#include <string>
#include <string_view>

namespace isolation
{
    class FormatError : public std::exception
    {
        private:
            std::string _message;

        public:
            explicit FormatError(const std::string & message) noexcept;

            auto what() const noexcept -> const char * override;
    };

    /// Single-byte size header only, so n <= 62. Padding bits must be zero.
    auto parse_graph6(std::string_view text) -> Graph;

    auto encode_graph6(const Graph & g) -> std::string;

    /// "n" on the first line, then one "u v" pair per line.
    auto parse_edge_list(std::string_view text) -> Graph;

    auto format_edge_list(const Graph & g) -> std::string;
}

#endif
