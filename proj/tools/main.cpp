#include <iostream>

#include "zetadiv_cli/run.hpp"

int main(int argc, char** argv) { return zetadiv::cli::main_with_args(argc, argv, std::cout, std::cerr); }
