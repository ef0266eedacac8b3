#include <iostream>

#include "sombor/cli.hpp"

int main(int argc, char** argv) { return sombor::cli::run(argc, argv, std::cout, std::cerr); }
