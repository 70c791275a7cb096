#include <iostream>

#include "gmew/cli.hpp"

int main(int argc, char** argv) { return gmew::cli_main(argc, argv, std::cout, std::cerr); }
