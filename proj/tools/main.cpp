#include <iostream>

#include "primspec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return primspec::run_command(args, std::cout, std::cerr);
}
