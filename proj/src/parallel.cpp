#include "aztec/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace aztec {

namespace {
int default_threads = 0;
}

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int threads) {
  if (default_threads == 0) default_threads = omp_get_max_threads();
  omp_set_num_threads(threads >= 1 ? threads : default_threads);
}

void apply_thread_env() {
  if (const char* env = std::getenv("AZTEC_THREADS")) {
    try {
      set_thread_count(std::stoi(env));
    } catch (const std::exception&) {
      // ignored: malformed values leave the runtime default in place
    }
  }
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::serial ? "serial" : "openmp";
}

}  // namespace aztec
