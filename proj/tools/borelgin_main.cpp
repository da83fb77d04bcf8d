#include <iostream>

#include "borelgin/cli.hpp"

int main(int argc, char** argv) { return borelgin::run_cli(argc, argv, std::cout, std::cerr); }
