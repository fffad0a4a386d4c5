#include <iostream>

#include "apoly/cli.hpp"

int main(int argc, char** argv) {
    return apoly::run_cli(argc, argv, std::cout, std::cerr);
}
