#include <iostream>

#include "pdas/cli.hpp"

int main(int argc, char** argv) { return pdas::cli::run(argc, argv, std::cout, std::cerr); }
