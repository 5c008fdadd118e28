#include <iostream>
#include <vector>

#include "singcol/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return singcol::cli_run(args, std::cout, std::cerr);
}
