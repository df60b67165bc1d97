#include <cstdlib>
#include <iostream>
#include <string>

#include "superchar/parallel.hpp"
#include "superchar_cli/commands.hpp"

int main(int argc, char** argv) {
  unsigned threads = 0;
  if (const char* env = std::getenv("SUPERCHAR_THREADS")) {
    try {
      threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "error: SUPERCHAR_THREADS must be a non-negative integer\n";
      return superchar::cli::kExitBadInput;
    }
  }
  superchar::set_max_threads(threads);
  return superchar::cli::run(argc, argv, std::cout, std::cerr);
}
