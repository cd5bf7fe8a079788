#include <iostream>
#include <string>
#include <vector>

#include "opchain/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return opchain::cli::run(std::move(args), std::cout, std::cerr);
}
