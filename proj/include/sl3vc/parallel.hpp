#pragma once

namespace sl3vc {

// Enumeration kernels come in two flavors: a plain serial reference used as
// the correctness baseline in tests, and an OpenMP-parallel production
// variant.  Both must produce identical (sorted) results.
enum class Parallelism { serial, parallel };

} // namespace sl3vc
