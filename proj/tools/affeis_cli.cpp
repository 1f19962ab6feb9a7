#include <iostream>

#include "jobs.hpp"

int main(int argc, char** argv) { return affeis::cli::main_entry(argc, argv, std::cout, std::cerr); }
