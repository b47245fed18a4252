#include <iostream>

#include "specmat/cli/commands.hpp"

int main(int argc, char** argv) { return specmat::cli::run(argc, argv, std::cout, std::cerr); }
