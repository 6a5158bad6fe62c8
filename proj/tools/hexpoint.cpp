#include <iostream>

#include "hexpoint/app/cli.hpp"

int main(int argc, char** argv) { return hexpoint::app::run_cli(argc, argv, std::cout, std::cerr); }
