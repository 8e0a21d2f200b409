#include <iostream>

#include "matchplay/cli.hpp"

int main(int argc, char** argv) {
    return matchplay::cli::run(argc, argv, std::cout, std::cerr);
}
