#include <iostream>

#include "softgrip/cli.hpp"

int main(int argc, char** argv) {
    return softgrip::cli_main(argc, argv, std::cout, std::cerr);
}
