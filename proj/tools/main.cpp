#include <iostream>
#include <string>
#include <vector>

#include "dops/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dops::run(args, std::cout, std::cerr);
}
