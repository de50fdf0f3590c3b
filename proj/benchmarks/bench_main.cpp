// Times the serial reference implementations against the OpenMP kernels:
// the certification grid scan and the Y-oracle sweep.

#include <chrono>
#include <cstdio>

#include "hankelforge/certifier.hpp"
#include "hankelforge/parallel.hpp"
#include "hankelforge/ymax.hpp"

namespace hf = hankelforge;

namespace {

double time_of(const auto& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::printf("workers available: %d\n\n", hf::effective_thread_count());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  for (const hf::FunctionClass cls : hf::kAllClasses) {
    double serial_max = 0.0, parallel_max = 0.0;
    const double ts = time_of([&] {
      serial_max = hf::search_max(cls, hf::GridSpec{}, false).search_max;
    });
    const double tp = time_of([&] {
      parallel_max = hf::search_max(cls, hf::GridSpec{}, true).search_max;
    });
    std::printf("certify %-26s %9.2fs %9.2fs %7.2fx%s\n", hf::class_name(cls).data(), ts,
                tp, ts / tp, serial_max == parallel_max ? "" : "  MISMATCH");
  }

  {
    const auto inputs = hf::sample_y_inputs(20000, 1);
    double gs = 0.0, gp = 0.0;
    const double ts =
        time_of([&] { gs = hf::oracle_agreement_sweep(inputs, 64, 64, false).max_gap; });
    const double tp =
        time_of([&] { gp = hf::oracle_agreement_sweep(inputs, 64, 64, true).max_gap; });
    std::printf("y-oracle sweep (2e4 triples)       %9.2fs %9.2fs %7.2fx%s\n", ts, tp,
                ts / tp, gs == gp ? "" : "  MISMATCH");
  }
  return 0;
}
