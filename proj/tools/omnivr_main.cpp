#include <iostream>

#include "omnivr/cli.hpp"

int main(int argc, char** argv) { return omnivr::cli::run(argc, argv, std::cout, std::cerr); }
