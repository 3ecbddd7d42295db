#include <iostream>

#include "fixkit/cli.hpp"

int main(int argc, char** argv) { return fixkit::cli::run(argc, argv, std::cout, std::cerr); }
