#include <iostream>

#include "realizer/cli.hpp"

int main(int argc, char** argv) { return realizer::run_cli(argc, argv, std::cout, std::cerr); }
