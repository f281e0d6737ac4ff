#include <iostream>

#include "akp/cli.hpp"

int main(int argc, char** argv) {
  return akp::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
