#include <iostream>

#include "famsw/cli/app.hpp"

int main(int argc, char** argv) { return famsw::cli::run_cli(argc, argv, std::cout, std::cerr); }
