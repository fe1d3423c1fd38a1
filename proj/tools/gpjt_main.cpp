#include <iostream>

#include "gpjt/cli.hpp"

int main(int argc, char** argv)
{
  return gpjt::cli_main(argc, argv, std::cout, std::cerr);
}
