#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gneseek/engine.hpp"
#include "gneseek/game.hpp"
#include "gneseek/geometry.hpp"
#include "gneseek/graph.hpp"
#include "gneseek/schedule.hpp"

using namespace gneseek;

namespace {

double run_timed(const TimeVaryingGame& game, const GraphTopology& graph,
                 const BregmanGeometry& geom, const StepSchedule& schedule,
                 ExecutionMode mode, RunTrace* out) {
  RunOptions options;
  options.mode = mode;
  options.seed = 2024;
  const auto start = std::chrono::steady_clock::now();
  *out = run(game, graph, geom, schedule, options);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

bool identical(const RunTrace& a, const RunTrace& b) {
  if (a.actions.size() != b.actions.size()) return false;
  for (std::size_t t = 0; t < a.actions.size(); ++t) {
    if (a.actions[t].size() != b.actions[t].size()) return false;
    for (int k = 0; k < a.actions[t].size(); ++k) {
      if (a.actions[t][k] != b.actions[t][k]) return false;
    }
    for (int i = 0; i < a.n_players; ++i) {
      if (a.lambda_norms[t][i] != b.lambda_norms[t][i]) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const int n = 20;
  const int rounds = 3000;
  const TimeVaryingGame game = cournot_game(n, rounds);
  const GraphTopology graph = build_ring(n);
  const BregmanGeometry geom = BregmanGeometry::euclidean(1);
  const StepSchedule schedule = StepSchedule::horizon_tuned(0.2, 0.8, rounds);

#ifdef _OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("compiled without OpenMP\n");
#endif

  RunTrace serial_trace, parallel_trace;
  // Warm both paths once so page faults and lazy allocations are off the clock.
  run_timed(game, graph, geom, schedule, ExecutionMode::Serial, &serial_trace);
  run_timed(game, graph, geom, schedule, ExecutionMode::Parallel, &parallel_trace);

  const double serial_s =
      run_timed(game, graph, geom, schedule, ExecutionMode::Serial, &serial_trace);
  const double parallel_s =
      run_timed(game, graph, geom, schedule, ExecutionMode::Parallel, &parallel_trace);

  std::printf("cournot n=%d T=%d ring topology\n", n, rounds);
  std::printf("serial   %.3f s  (%.2f us/round)\n", serial_s, 1e6 * serial_s / rounds);
  std::printf("parallel %.3f s  (%.2f us/round)\n", parallel_s, 1e6 * parallel_s / rounds);
  std::printf("speedup  %.2fx\n", serial_s / parallel_s);

  if (!identical(serial_trace, parallel_trace)) {
    std::printf("FAIL: serial and parallel traces differ\n");
    return 1;
  }
  std::printf("traces bit-identical across modes\n");
  return 0;
}
