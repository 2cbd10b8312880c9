#include <iostream>

#include "gsw/cli/cli.hpp"

int main(int argc, char** argv) { return gsw::cli::run(argc, argv, std::cout, std::cerr); }
