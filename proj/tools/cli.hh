#ifndef DRG_TOOLS_CLI_HH
#define DRG_TOOLS_CLI_HH

#include <ostream>
#include <string>
#include <vector>

namespace drg::cli
{
    enum exit_status : int
    {
        exit_pass = 0,
        exit_verification_failure = 1,
        exit_input_error = 2,
    };

    /// Runs one command line (without the program name) and returns the exit status.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
