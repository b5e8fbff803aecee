// Compares the OpenMP product kernel against the serial reference, and the
// parallel property runner against a serial loop, on the largest groups the
// cap admits.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "unitlab/unit_structure.hpp"

using namespace unitlab;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench_product(const PGroup& g, int reps) {
  AlgebraElement x = random_normalized_unit(g, Seed{7});
  AlgebraElement y = random_normalized_unit(g, Seed{8});

  auto t0 = clock_type::now();
  AlgebraElement serial = mul_serial(x, y);
  for (int i = 1; i < reps; ++i) serial = mul_serial(serial, y);
  double t_serial = seconds_since(t0);

  t0 = clock_type::now();
  AlgebraElement parallel = x * y;
  for (int i = 1; i < reps; ++i) parallel = parallel * y;
  double t_parallel = seconds_since(t0);

  if (serial != parallel) {
    std::printf("MISMATCH between kernels on %s\n", g.label().c_str());
    std::exit(1);
  }
  std::printf("%-28s |G|=%3d  %4d products  serial %8.4fs  gather/omp %8.4fs  speedup %.2fx\n",
              g.label().c_str(), g.order(), reps, t_serial, t_parallel, t_serial / t_parallel);
}

void bench_sampler(const PGroup& g, int samples) {
  // x^p centrality over seeded samples: serial loop vs the parallel runner.
  auto t0 = clock_type::now();
  bool ok = true;
  for (int i = 0; i < samples; ++i) {
    AlgebraElement x = random_normalized_unit(g, sample_seed(Seed{1}, i));
    ok = ok && pth_power_centrality(x).central;
  }
  double t_serial = seconds_since(t0);

  t0 = clock_type::now();
  bool ok_par = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok_par)
  for (int i = 0; i < samples; ++i) {
    AlgebraElement x = random_normalized_unit(g, sample_seed(Seed{1}, i));
    ok_par = ok_par && pth_power_centrality(x).central;
  }
  double t_parallel = seconds_since(t0);

  if (ok != ok_par) {
    std::printf("MISMATCH between sample runners on %s\n", g.label().c_str());
    std::exit(1);
  }
  std::printf("%-28s %d centrality samples      serial %8.4fs  omp %8.4fs  speedup %.2fx\n",
              g.label().c_str(), samples, t_serial, t_parallel, t_serial / t_parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both kernels run serially\n");
#endif

  PGroup e27 = build_extraspecial(Prime(3), ExtraspecialExp::P);
  PGroup e125 = build_extraspecial(Prime(5), ExtraspecialExp::P);
  PGroup c343 = build_cyclic(Prime(7), 3);
  PGroup m343 = build_modular_maximal_cyclic(Prime(7), 3);

  bench_product(e27, 2000);
  bench_product(e125, 400);
  bench_product(c343, 100);
  bench_product(m343, 100);

  bench_sampler(e27, 400);
  bench_sampler(e125, 100);
  return 0;
}
