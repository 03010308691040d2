#include "hck/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hck {

std::size_t default_jobs() {
  const char* env = std::getenv("HCK_JOBS");
  if (env == nullptr) return 1;
  try {
    const long v = std::stol(env);
    return v > 0 ? static_cast<std::size_t>(v) : 1;
  } catch (...) {
    return 1;
  }
}

}  // namespace hck
