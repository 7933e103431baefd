#include <invmark/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return invmark::cli::run(argc, argv, std::cout, std::cerr); }
