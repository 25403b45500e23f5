#include <iostream>

#include "mixlink/cli.hpp"

int main(int argc, char** argv) { return mixlink::run_cli(argc, argv, std::cout, std::cerr); }
