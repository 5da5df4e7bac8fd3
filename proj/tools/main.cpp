#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return dcsign::cli::run(argc, argv, std::cout, std::cerr); }
