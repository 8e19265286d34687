#include <iostream>

#include "distcol/cli.hpp"

int main(int argc, char** argv) { return distcol::run_cli(argc, argv, std::cout, std::cerr); }
