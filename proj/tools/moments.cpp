#include <iostream>

#include "moments/cli.hpp"

int main(int argc, char** argv) { return moments::cli::main_entry(argc, argv, std::cout, std::cerr); }
