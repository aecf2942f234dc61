#include <iostream>

#include "cbqo/cli.hpp"

int main(int argc, char** argv) {
  return cbqo::cli::run(argc, argv, std::cout, std::cerr);
}
