#include <iostream>

#include "yangbax/cli.hpp"

int main(int argc, char** argv) { return yangbax::cli::run(argc, argv, std::cout, std::cerr); }
