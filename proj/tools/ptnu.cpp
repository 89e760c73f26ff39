#include <iostream>

#include "ptnu/cli.hpp"

int main(int argc, char** argv) { return ptnu::cli::run(argc, argv, std::cout, std::cerr); }
