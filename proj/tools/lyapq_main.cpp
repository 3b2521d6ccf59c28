#include <iostream>
#include <string>
#include <vector>

#include "lyapq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lyapq::run_cli(args, std::cout, std::cerr);
}
