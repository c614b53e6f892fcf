#include <iostream>

#include "rankbench/cli.hpp"

int main(int argc, char** argv) { return rankbench::run_cli(argc, argv, std::cout, std::cerr); }
