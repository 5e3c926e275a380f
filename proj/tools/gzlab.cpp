#include <iostream>

#include "gzlab/cli.hpp"

int main(int argc, char** argv) { return gzlab::cli::main_entry(argc, argv, std::cout, std::cerr); }
