#include <string>
#include <vector>
#include <iostream>

#include "psl/cli.hpp"

int main(int argc, char** argv) { return psl::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr); }
