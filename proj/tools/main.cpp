#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
    return traysight::cli::run(argc, argv, std::cout, std::cerr);
}
