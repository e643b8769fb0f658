#include "flagslice/parallel.hpp"

#include <cstdlib>
#include <string>

namespace flagslice {

unsigned thread_cap() {
  if (const char* env = std::getenv("FLAGSLICE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace flagslice
