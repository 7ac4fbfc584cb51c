#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return padepm::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
