#include <iostream>

#include "lctr/cli.hpp"

int main(int argc, char** argv) { return lctr::cli::run_cli(argc, argv, std::cout, std::cerr); }
