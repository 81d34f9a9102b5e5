#ifndef QUIVERFAN_CLI_HPP
#define QUIVERFAN_CLI_HPP

#include <string>
#include <vector>

namespace quiverfan::cli {

struct RunResult {
    int exit_code = 0;
    std::string out;  // JSON document (or help text)
    std::string err;  // human-readable summary
};

/// Runs one command. `args` excludes the program name. Exit status is 0 on
/// success, 1 for usage, I/O and schema errors, 2 for domain errors.
RunResult run(const std::vector<std::string>& args);

}  // namespace quiverfan::cli

#endif  // QUIVERFAN_CLI_HPP
