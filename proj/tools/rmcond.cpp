#include "rmcond/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return rmcond::cli::run_cli(argc, argv, std::cout, std::cerr); }
