#include <iostream>

#include "ritt/cli.hpp"

int main(int argc, char** argv) { return ritt::run(argc, argv, std::cout, std::cerr); }
