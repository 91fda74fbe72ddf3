#include <iostream>

#include "finsum/cli.hpp"

int main(int argc, char** argv) { return finsum::cli::run(argc, argv, std::cout, std::cerr); }
