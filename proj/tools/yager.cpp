#include <iostream>
#include <string>
#include <vector>

#include "yager/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return yager::cli::run(std::move(args), std::cout, std::cerr);
}
