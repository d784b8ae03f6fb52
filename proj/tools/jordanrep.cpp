#include <iostream>

#include "jordanrep/cli.hpp"

int main(int argc, char** argv) { return jordanrep::run_cli(argc, argv, std::cout, std::cerr); }
