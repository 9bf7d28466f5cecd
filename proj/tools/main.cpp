#include <iostream>

#include "pellpow/cli.hpp"

int main(int argc, char** argv) { return pellpow::run_cli(argc, argv, std::cout, std::cerr); }
