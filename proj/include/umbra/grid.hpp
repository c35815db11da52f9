#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace umbra {

// Serial is the reference path; Parallel fans the independent evaluations
// out with OpenMP when the build has it and must produce bitwise identical
// samples.
enum class ExecPolicy { Serial, Parallel };

// Samples f at x0 + j*dx for j = 0..count-1.
std::vector<double> sample_grid(const std::function<double(double)>& f,
                                double x0, double dx, std::size_t count,
                                ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace umbra
