#include <iostream>

#include "refstab/commands.hpp"

int main(int argc, char** argv) { return refstab::run_cli(argc, argv, std::cout, std::cerr); }
