#include <iostream>

#include "vir/cli.hpp"

int main(int argc, char** argv) { return vir::cli::run(argc, argv, std::cout, std::cerr); }
