#include <iostream>

#include "witt/cli.hpp"

int main(int argc, char** argv) { return witt::run_cli(argc, argv, std::cout, std::cerr); }
