#include <iostream>

#include "selmer/cli.hpp"

int main(int argc, char** argv) { return selmer::cli::run(argc, argv, std::cout, std::cerr); }
