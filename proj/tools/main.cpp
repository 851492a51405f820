#include <iostream>

#include "docsieve/cli.hpp"

int main(int argc, char** argv) { return docsieve::run_cli(argc, argv, std::cout, std::cerr); }
