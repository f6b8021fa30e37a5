#ifndef TROPICAL_CLI_HH
#define TROPICAL_CLI_HH 1

#include <ostream>
#include <string>
#include <vector>

namespace tropical
{
    /**
     * Runs the command line tool on args, which exclude the program name.
     * Returns 0 for solvable or PASS, 1 for unsolvable or FAIL, and 2 for a
     * usage or input error, which is described on err.
     */
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
