#include <iostream>

#include "rbfpielm/cli.hpp"

int main(int argc, char** argv) { return rbfpielm::run_cli(argc, argv, std::cout, std::cerr); }
