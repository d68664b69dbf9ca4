#include "reskit/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace reskit {

int par_threads() {
#ifdef _OPENMP
  static const int cap = [] {
    const int hw = std::max(1, omp_get_max_threads());
    const char* env = std::getenv("RESKIT_THREADS");
    if (!env || !*env) return hw;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v <= 0) return hw;  // 0 or garbage = auto
    return static_cast<int>(std::min<long>(v, hw));
  }();
  return cap;
#else
  return 1;
#endif
}

}  // namespace reskit
