#include <iostream>

#include "nlie/cli.hpp"

int main(int argc, char** argv) { return nlie::cli::run(argc, argv, std::cout, std::cerr); }
