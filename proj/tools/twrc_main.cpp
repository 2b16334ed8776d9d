// twrc: rate regions and outer bounds for the two-way relay channel.

#include <iostream>
#include <string>
#include <vector>

#include "twrc/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return twrc::cli::run(std::move(args), std::cout, std::cerr);
}
