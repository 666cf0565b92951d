#include <iostream>

#include "qalg/cli.hpp"

int main(int argc, char** argv) { return qalg::cli_main(argc, argv, std::cout, std::cerr); }
