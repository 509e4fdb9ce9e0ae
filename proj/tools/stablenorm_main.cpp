#include <iostream>

#include "stablenorm/cli.hpp"

int main(int argc, char** argv) { return stablenorm::cli::run(argc, argv, std::cout, std::cerr); }
