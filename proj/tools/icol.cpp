#include <icol/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return icol::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
