#include <iostream>

#include "hypbounds/cli.hpp"

int main(int argc, char** argv) {
  return hyp::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
