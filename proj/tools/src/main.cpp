#include <iostream>

#include "mzvlab_cli/cli.hpp"

int main(int argc, char** argv) { return mzvlab::cli::run(argc, argv, std::cout, std::cerr); }
