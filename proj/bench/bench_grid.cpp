// Times the OpenMP grid sampler against its serial reference on the
// quadrature route of the discrete Airy function and checks the outputs
// stay bitwise identical.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "umbra/grid.hpp"
#include "umbra/solutions.hpp"

namespace {

std::vector<double> run(umbra::ExecPolicy policy, std::size_t count,
                        double* ms) {
  auto kernel = [](double x) {
    return umbra::um_airy(x, 0.25, umbra::AiryMethod::Quadrature);
  };
  const auto t0 = std::chrono::steady_clock::now();
  auto v = umbra::sample_grid(kernel, 0.0, 4.0 / static_cast<double>(count),
                              count, policy);
  const auto t1 = std::chrono::steady_clock::now();
  *ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t count = 256;
  if (argc > 1) count = std::strtoul(argv[1], nullptr, 10);
  if (count == 0) {
    std::fprintf(stderr, "usage: %s [points > 0]\n", argv[0]);
    return 2;
  }

  // Warm-up pass so allocator and thread-pool startup stay out of the clock.
  double warm = 0.0;
  run(umbra::ExecPolicy::Parallel, 16, &warm);

  double serial_ms = 0.0, parallel_ms = 0.0;
  const auto s = run(umbra::ExecPolicy::Serial, count, &serial_ms);
  const auto p = run(umbra::ExecPolicy::Parallel, count, &parallel_ms);

  bool identical = s.size() == p.size();
  for (std::size_t j = 0; identical && j < s.size(); ++j)
    identical = (s[j] == p[j]);

  std::printf("grid kernel: discrete Airy quadrature, %zu points on [0,4]\n",
              count);
  std::printf("  serial:   %9.3f ms\n", serial_ms);
  std::printf("  parallel: %9.3f ms\n", parallel_ms);
  std::printf("  speedup:  %9.3fx\n",
              parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0);
  std::printf("  outputs bitwise identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
