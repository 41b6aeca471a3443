#include "metslope/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return metslope::cli::main_entry(argc, argv, std::cout, std::cerr);
}
