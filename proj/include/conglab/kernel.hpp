#pragma once

namespace conglab {

// Serial is the reference path; Parallel runs the same search under OpenMP.
enum class Kernel { Serial, Parallel };

}  // namespace conglab
