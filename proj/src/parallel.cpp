#include "invlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace invlab {

std::size_t thread_count() {
  if (const char* env = std::getenv("INVLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return std::size_t(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace invlab
