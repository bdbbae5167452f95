/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return isolation::run(args, std::cin, std::cout, std::cerr);
}
