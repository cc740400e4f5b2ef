#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icol
{
    namespace exit_code
    {
        inline constexpr int ok = 0;           // valid / found
        inline constexpr int negative = 1;     // invalid / exhausted / parse error
        inline constexpr int inconclusive = 2; // budget ran out
        inline constexpr int usage = 64;
    }

    /// Runs the icol command line. args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
