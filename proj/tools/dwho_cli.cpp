#include <iostream>

#include "dwho/cli.hpp"

int main(int argc, char** argv) { return dwho::cli::main_entry(argc, argv, std::cout, std::cerr); }
