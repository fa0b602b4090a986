#include <iostream>

#include "imcsim/cli.hpp"

int main(int argc, char** argv) { return imcsim::run_cli(argc, argv, std::cout, std::cerr); }
