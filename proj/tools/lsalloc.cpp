#include <iostream>

#include "lsa/cli.hpp"

int main(int argc, char** argv) { return lsa::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
