#include "bcforge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bcforge {

unsigned default_threads() {
  if (const char* env = std::getenv("BCFORGE_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace bcforge
