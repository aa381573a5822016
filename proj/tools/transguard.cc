#include <iostream>

#include "transguard/cli.h"

int main(int argc, char** argv) { return transguard::run_cli(argc, argv, std::cout, std::cerr); }
