#include <iostream>

#include "symdg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symdg::run_cli(args, std::cout, std::cerr);
}
