#include <iostream>

#include "r2k/cli.hpp"

int main(int argc, char** argv) { return r2k::cli::run(argc, argv, std::cout, std::cerr); }
