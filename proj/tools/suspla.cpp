#include <iostream>

#include "suspla/cli.hpp"

int main(int argc, char** argv) { return suspla::run_cli(argc, argv, std::cout, std::cerr); }
