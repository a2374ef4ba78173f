#include "wilsoncg/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace wilsoncg {

std::size_t worker_count() {
  if (const char* env = std::getenv("WILSONCG_THREADS")) {
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace wilsoncg
