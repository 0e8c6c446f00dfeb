#include <iostream>

#include "rooted/cli.hpp"

int main(int argc, char** argv) { return rooted::run_cli(argc, argv, std::cout, std::cerr); }
