#include <iostream>

#include "yendo/cli.hpp"

int main(int argc, char** argv) { return yendo::run_cli(argc, argv, std::cout, std::cerr); }
