#include "tsq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    tsq::CommandResult result = tsq::runCli(args);
    std::cout << result.document.dump() << "\n";
    return result.exitCode;
}
