#include <iostream>

#include "pdtree/cli.hpp"

int main(int argc, char** argv) {
  pdtree::RunConfig cfg;
  if (auto code = pdtree::parse_command_line(argc, argv, cfg, std::cout, std::cerr)) return *code;
  return pdtree::run(cfg, std::cout, std::cerr);
}
