#include <iostream>
#include <vector>

#include "topmono/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return topmono::run_cli(args, std::cout, std::cerr);
}
