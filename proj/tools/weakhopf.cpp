#include "weakhopf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return weakhopf::cli::run(argc, argv, std::cout, std::cerr); }
