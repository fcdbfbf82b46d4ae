#include <iostream>

#include <sscreen/cli.hpp>

int main(int argc, char** argv) { return sscreen::cli::run(argc, argv, std::cout, std::cerr, std::cin); }
