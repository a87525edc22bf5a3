#include <iostream>

#include "balines/cli.hpp"

int main(int argc, char** argv) {
  return balines::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
