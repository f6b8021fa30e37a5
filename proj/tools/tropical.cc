#include <tropical/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return tropical::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
