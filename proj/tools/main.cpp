#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hbtensor::cli::run(argc, argv, std::cout, std::cerr); }
