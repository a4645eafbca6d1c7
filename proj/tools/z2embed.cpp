#include <iostream>
#include <string>
#include <vector>

#include "z2embed/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return z2embed::run_cli(args, std::cout, std::cerr);
}
