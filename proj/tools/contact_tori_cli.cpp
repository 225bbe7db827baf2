#include <iostream>
#include <string>
#include <vector>

#include "contact_tori/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return contact_tori::cli::dispatch(args, std::cout, std::cerr);
}
