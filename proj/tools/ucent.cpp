#include <iostream>

#include "ucent/cli.hpp"

int main(int argc, char** argv) { return ucent::run_cli(argc, argv, std::cout, std::cerr); }
