#include "quiverfan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const quiverfan::cli::RunResult result = quiverfan::cli::run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
