#pragma once

// Execution backend selection for the data-parallel kernels. Every kernel
// has a serial reference path and an OpenMP path that must agree exactly.

#include <string_view>

namespace aztec {

enum class Backend { serial, openmp };

// Number of worker threads the OpenMP backend will use.
int thread_count();

// Sets the OpenMP thread count; values < 1 restore the runtime default.
void set_thread_count(int threads);

// Reads AZTEC_THREADS from the environment (if set) and applies it.
void apply_thread_env();

std::string_view backend_name(Backend backend);

}  // namespace aztec
