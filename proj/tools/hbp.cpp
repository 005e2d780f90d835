#include <iostream>

#include "hbp/cli.hpp"

int main(int argc, char** argv) {
    return hbp::cli::run(argc, argv, std::cout, std::cerr);
}
