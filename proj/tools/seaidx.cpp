#include <iostream>

#include "seaidx/cli.hpp"

int main(int argc, char** argv) { return seaidx::cli::run(argc, argv, std::cout, std::cerr); }
