#include <iostream>

#include "slcp/cli.hpp"

int main(int argc, char** argv) {
    return slcp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
