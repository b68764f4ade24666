#include "recdiv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return recdiv::cli::run(argc, argv, std::cout, std::cerr); }
