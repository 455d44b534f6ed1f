#include <iostream>

#include "besico_cli.hpp"

int main(int argc, char** argv) { return besico::cli::run(argc, argv, std::cout, std::cerr); }
