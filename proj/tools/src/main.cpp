#include "hhodge_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return hhodge::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
