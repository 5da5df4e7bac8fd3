#include "dcsign/parallel.hpp"

#include <cstdlib>
#include <string>

namespace dcsign {

std::size_t worker_count() {
  if (const char* env = std::getenv("DCSIGN_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace dcsign
