#include <iostream>

#include "aztec/cli.hpp"

int main(int argc, char** argv) { return aztec::cli::run(argc, argv, std::cout, std::cerr); }
