/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ISOLATION_GUARD_CLI_HH
#define ISOLATION_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace isolation
{
    namespace exit_code
    {
        constexpr int success = 0;
        constexpr int domain_error = 1;
        constexpr int usage_error = 2;
    }

    /**
     * Runs one command line. args excludes the program name. Graph input comes from a positional
     * argument, --input, or in, in that order of preference.
     */
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
