#include "arcroll/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return arcroll::run_cli(argc, argv, std::cout, std::cerr); }
