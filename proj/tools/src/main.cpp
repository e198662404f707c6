#include <iostream>

#include "latkit_cli/cli.hpp"

int main(int argc, char** argv) { return latkit::cli::run(argc, argv, std::cout, std::cerr); }
