#include <iostream>

#include "lambda3/cli/cli.hpp"

int main(int argc, char** argv) { return lambda3::cli::run(argc, argv, std::cout, std::cerr); }
