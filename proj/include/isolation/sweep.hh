/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_SWEEP_HH
#define ISOLATION_GUARD_SWEEP_HH 1

#include <isolation/graph.hh>
#include <isolation/isolation.hh>
#include <isolation/patterns.hh>

#include <cstddef>
#include <exception>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isolation
{
    class SweepError : public std::exception
    {
        private:
            std::size_t _record;
            std::string _message;

        public:
            SweepError(std::size_t record, const std::string & message) noexcept;

            /// Zero-based index of the offending record.
            auto record() const -> std::size_t { return _record; }
            auto what() const noexcept -> const char * override;
    };

    struct SweepFilter
    {
        bool require_connected = false;
        std::optional<int> min_degree, max_degree, vertex_count;

        /// Throws GraphError when min_degree > max_degree.
        auto validate() const -> void;
        auto accepts(const Graph & g) const -> bool;
        auto describe() const -> std::string;
    };

    class BoundRule
    {
        public:
            enum class Kind
            {
                floor_division,
                fixed
            };

        private:
            Kind _kind;
            int _value;

            BoundRule(Kind kind, int value);

        public:
            static auto floor_n_over(int divisor) -> BoundRule;
            static auto fixed(int bound) -> BoundRule;

            auto bound_for(int n) const -> int;
            auto describe() const -> std::string;
    };

    /// "floor5", "floor:<d>", or a non-negative integer.
    auto parse_bound_rule(std::string_view text) -> BoundRule;

    struct Violator
    {
        std::string graph6;
        int isolation_number;
        int bound;
    };

    struct SweepReport
    {
        std::size_t scanned = 0, passed_filter = 0;
        /// Sorted by graph6 text.
        std::vector<Violator> violators;
        FamilySpec family = FamilySpec::c4();
        SweepFilter filter;
        BoundRule bound = BoundRule::floor_n_over(5);
    };

    struct SweepOptions
    {
        unsigned workers = 1;
        SearchOptions search;
    };

    /// Records one per line; blank lines and a leading ">>graph6<<" marker are skipped.
    auto read_catalog(const std::filesystem::path & path) -> std::vector<std::string>;

    auto sweep_records(std::span<const std::string> records, const FamilySpec & f, const SweepFilter & filter,
            const BoundRule & bound, const SweepOptions & options = {}) -> SweepReport;

    auto sweep_catalog(const std::filesystem::path & path, const FamilySpec & f, const SweepFilter & filter,
            const BoundRule & bound, const SweepOptions & options = {}) -> SweepReport;

    auto format_report(const SweepReport & report) -> std::string;

    /// Multiset equality up to isomorphism.
    auto same_up_to_isomorphism(const std::vector<Graph> & a, const std::vector<Graph> & b) -> bool;
}

#endif
