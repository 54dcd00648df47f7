#include <iostream>

#include "assoclab/cli.hpp"

int main(int argc, char** argv) { return assoclab::run_cli(argc, argv, std::cout, std::cerr); }
