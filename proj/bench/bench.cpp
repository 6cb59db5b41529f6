// Serial reference path against the OpenMP path for the grid kernels.
// Usage: ecdc_bench [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "ecdc/cconj.hpp"
#include "ecdc/dc_duality.hpp"
#include "ecdc/instances.hpp"
#include "ecdc/parallel.hpp"

using namespace ecdc;

namespace {

template <class R>
double time_ms(int reps, const std::function<R()>& fn, R& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) out = fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

template <class R>
bool row(const std::string& name, int reps, const std::function<R(Exec)>& kernel) {
  R serial{};
  R parallel{};
  const double ts = time_ms<R>(reps, [&] { return kernel(Exec::kSerial); }, serial);
  const double tp = time_ms<R>(reps, [&] { return kernel(Exec::kParallel); }, parallel);
  const bool same = serial == parallel;
  std::printf("%-28s %10.2f %10.2f %8.2fx  %s\n", name.c_str(), ts, tp, ts / tp, same ? "identical" : "DIFFERENT");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 5;
  std::printf("threads: %d, repetitions: %d\n", worker_count(), reps);
  std::printf("%-28s %10s %10s %9s  %s\n", "kernel", "serial ms", "omp ms", "speedup", "results");

  bool ok = true;
  const SquareExample sq = example_square();
  ok &= row<std::vector<std::pair<double, std::size_t>>>("direction_maxima (16384)", reps, [&](Exec e) {
    return direction_maxima(sq.C.points, {5.0, 2.5}, 16384, e);
  });

  const DCInstance inst = random_instances(12, 1, GenConfig{1.0}).front();
  std::vector<double> xs;
  for (int i = -64; i <= 64; ++i) xs.push_back(i / 16.0);
  ok &= row<std::vector<ExtReal>>("eco_hull (129 x W-grid)", reps, [&](Exec e) {
    return eco_hull(inst.g, xs, {}, e).value;
  });

  FullGrid grid;
  for (int i = -24; i <= 24; ++i) grid.xstar.push_back(i / 8.0);
  grid.ystar = {-1.0, 0.0, 1.0};
  grid.alpha = {-1.0, 0.5, 2.0};
  ok &= row<ExtReal>("six-variable dual grid", reps, [&](Exec e) { return dual_DF_full_grid(inst, grid, 0.0, e); });

  ok &= row<std::vector<ExtReal>>("map_index conjugates (1e5)", reps, [&](Exec e) {
    return map_index<ExtReal>(100000, [&](std::size_t i) {
      return fenchel_conjugate(inst.f, -4.0 + 8.0 * static_cast<double>(i) / 99999.0).value;
    }, e);
  });

  SearchConfig serial_cfg;
  serial_cfg.exec = Exec::kSerial;
  SearchConfig parallel_cfg;
  ok &= row<ExtReal>("dual sweep (sup-inf)", reps, [&](Exec e) {
    return dual_DF_value(inst, e == Exec::kSerial ? serial_cfg : parallel_cfg).value;
  });
  return ok ? 0 : 1;
}
