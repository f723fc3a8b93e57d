#include "graphburn/parallel.hpp"

#include <cstdlib>

namespace graphburn {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("GRAPHBURN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace graphburn
