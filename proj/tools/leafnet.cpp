#include <iostream>

#include "leafnet/cli.hpp"

int main(int argc, char** argv) { return leafnet::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
