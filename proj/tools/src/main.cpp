#include "at4kit/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return at4kit::cli::run(argc, argv, std::cout, std::cerr);
}
