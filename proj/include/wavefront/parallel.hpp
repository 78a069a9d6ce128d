#pragma once

namespace wavefront {

enum class Execution { Serial, Parallel };

/// Worker count for parallel kernels: the OpenMP default, capped by the
/// positive integer in WAVEFRONT_THREADS when that variable is set.
int max_threads();

}  // namespace wavefront
