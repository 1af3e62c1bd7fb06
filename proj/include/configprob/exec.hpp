#pragma once

namespace configprob {

// Kernel execution policy. `serial` is the reference path; `parallel` fans
// out over OpenMP threads and must produce identical results.
enum class Exec { serial, parallel };

} // namespace configprob
