#include <iostream>

#include "orthoentropy/cli.hpp"

int main(int argc, char** argv) { return orthoentropy::cli::main_entry(argc, argv, std::cout, std::cerr); }
