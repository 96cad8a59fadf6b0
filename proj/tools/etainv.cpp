#include <iostream>

#include "etainv/cli.hpp"

int main(int argc, char **argv) { return etainv::cli::main_entry(argc, argv, std::cout, std::cerr); }
