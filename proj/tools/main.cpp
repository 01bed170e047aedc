#include <iostream>

#include "jfunc/cli.hpp"

int main(int argc, char** argv) { return jfunc::run_cli(argc, argv, std::cout, std::cerr); }
