#include <iostream>

#include "nilcone/cli.hpp"

int main(int argc, char** argv) {
  return nilcone::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
