#include <iostream>

#include "preeq/cli/commands.hpp"

int main(int argc, char** argv) { return preeq::cli::run(argc, argv, std::cout, std::cerr); }
