#include "mloc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mloc {

namespace {

unsigned from_environment() {
  if (const char* env = std::getenv("MLOC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

std::atomic<unsigned>& setting() {
  static std::atomic<unsigned> threads{from_environment()};
  return threads;
}

}  // namespace

unsigned default_parallelism() { return setting().load(); }

void set_default_parallelism(unsigned threads) { setting().store(threads == 0 ? 1 : threads); }

}  // namespace mloc
