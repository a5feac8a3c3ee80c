#include <iostream>
#include <string>
#include <vector>

#include "hbgrowth/cli.hpp"

int main(int argc, char** argv) {
  return hbg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
