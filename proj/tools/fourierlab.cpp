#include <iostream>

#include "fourierlab/cli.hpp"

int main(int argc, char** argv) { return fourierlab::cli::run(argc, argv, std::cout, std::cerr); }
