#include <iostream>

#include "lpkit/cli.hpp"

int main(int argc, char** argv) { return lpkit::run_cli(argc, argv, std::cout, std::cerr); }
