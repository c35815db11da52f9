#include "umbra/grid.hpp"

#include <exception>
#include <mutex>

#include "umbra/errors.hpp"

namespace umbra {

std::vector<double> sample_grid(const std::function<double(double)>& f,
                                double x0, double dx, std::size_t count,
                                ExecPolicy policy) {
  if (!f) throw DomainError("sample_grid needs a callable");
  std::vector<double> out(count);
  const long n = static_cast<long>(count);
  if (policy == ExecPolicy::Serial) {
    for (long j = 0; j < n; ++j)
      out[static_cast<std::size_t>(j)] = f(x0 + dx * static_cast<double>(j));
    return out;
  }
  // Exceptions must not unwind across the parallel region; keep the first
  // one and rethrow after the join.
  std::exception_ptr err = nullptr;
  std::mutex err_mu;
#ifdef UMBRA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long j = 0; j < n; ++j) {
    try {
      out[static_cast<std::size_t>(j)] = f(x0 + dx * static_cast<double>(j));
    } catch (...) {
      const std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace umbra
