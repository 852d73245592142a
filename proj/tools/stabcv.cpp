#include <iostream>

#include "stabcv/cli.hpp"

int main(int argc, char** argv) { return stabcv::run_cli(argc, argv, std::cout, std::cerr); }
