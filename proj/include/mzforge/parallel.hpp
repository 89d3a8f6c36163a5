#pragma once

namespace mzf {

// Effective OpenMP thread count, honoring the MZFORGE_THREADS cap.
int thread_count();

// Applies MZFORGE_THREADS (if set and positive) to the OpenMP runtime.
// Called once by the executables; library code just uses omp defaults.
void apply_thread_cap();

} // namespace mzf
