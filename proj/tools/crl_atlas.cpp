#include <iostream>
#include <string>
#include <vector>

#include "crl_atlas/cli.hpp"

int main(int argc, char** argv) {
    return crl_atlas::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
