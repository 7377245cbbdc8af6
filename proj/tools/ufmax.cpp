#include "ufmax/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return ufmax::cli_dispatch(argc, argv, std::cout, std::cerr);
}
