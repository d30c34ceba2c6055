#include <iostream>

#include "zpe/cli.hpp"

int main(int argc, char** argv) { return zpe::cli::main_entry(argc, argv, std::cout, std::cerr); }
