#include <iostream>

#include "tdhom/fixtures.hpp"

int main(int argc, char** argv) {
  const tdhom::cli::Context ctx{tdhom::cli::builtin_fixtures(), &std::cout, &std::cerr};
  return tdhom::cli::run(argc, argv, ctx);
}
