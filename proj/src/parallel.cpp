#include "hankelforge/parallel.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hankelforge {

int effective_thread_count(int requested) {
#ifdef _OPENMP
  int n = requested > 0 ? requested : omp_get_max_threads();
  if (const char* env = std::getenv("HANKELFORGE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<long>(n, cap);
  }
  return std::max(1, n);
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace hankelforge
