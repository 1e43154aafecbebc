#include <iostream>

#include "bessum/cli.hpp"

int main(int argc, char** argv) { return bessum::cli::run(argc, argv, std::cout, std::cerr); }
