#include "superchar/parallel.hpp"

namespace superchar {

namespace {
std::atomic<unsigned> g_max_threads{1};
}  // namespace

void set_max_threads(unsigned n) {
  g_max_threads = n == 0 ? std::max(1U, std::thread::hardware_concurrency()) : n;
}

unsigned max_threads() { return g_max_threads; }

}  // namespace superchar
