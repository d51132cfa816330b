#include <iostream>

#include "eucdom/cli.hpp"

int main(int argc, char** argv) { return eucdom::cli::run(argc, argv, std::cout, std::cerr); }
