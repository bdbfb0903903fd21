#include <iostream>

#include "loyd/cli.hpp"

int main(int argc, char** argv) { return loyd::cli::run(argc, argv, std::cout, std::cerr); }
