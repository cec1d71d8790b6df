#include "mbpns/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mbpns {

unsigned thread_count() {
  if (const char* env = std::getenv("MBPNS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
      // fall through to the default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace mbpns
