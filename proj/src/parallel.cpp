#include "ggt/parallel.hpp"

namespace ggt {

namespace {
int g_max_threads = 0;  // 0 = hardware default
}

int max_threads() {
  if (g_max_threads > 0) return g_max_threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_max_threads(int k) { g_max_threads = k; }

}  // namespace ggt
