#include <iostream>
#include <string>
#include <vector>

#include "gqc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gqc::cli::run(args, std::cout, std::cerr, std::cin);
}
