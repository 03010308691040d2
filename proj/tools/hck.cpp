#include <iostream>

#include "hck/cli.hpp"

int main(int argc, char** argv) { return hck::run_cli(argc, argv, std::cout, std::cerr); }
