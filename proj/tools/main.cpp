#include <iostream>
#include <string>
#include <vector>

#include "affprym/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return affprym::cli::run(args, std::cout, std::cerr);
}
