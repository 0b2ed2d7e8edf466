#include <iostream>

#include "cotoral/cli.hpp"

int main(int argc, char** argv) { return cotoral::parse_and_dispatch(argc, argv, std::cout); }
