#include <iostream>
#include <string>
#include <vector>

#include "lagobs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lagobs::cli::run(args, std::cout, std::cerr);
}
