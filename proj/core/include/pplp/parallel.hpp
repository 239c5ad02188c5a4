#pragma once

// Task-parallel parametric LP solver.
//
// A task is a probe point together with the region it was emitted from. All
// tasks share one region store (publish-indexed array) and one basis table;
// a worker that finds a basis someone else is already building gives up on
// its task for now and requeues it.

#include "pplp/concurrent_store.hpp"
#include "pplp/plp.hpp"

#include <atomic>
#include <optional>
#include <vector>

namespace pplp {

struct Task {
  std::optional<std::size_t> from;  // region index in the store
  RationalVector probe;
  unsigned perturbation = 0;        // re-probes so far after flat regions
  bool repair = false;              // emitted by a failed adjacency check
};

enum class Scheduler { fan_out_rounds, dynamic_pool };

struct AtomicStats {
  std::atomic<std::size_t> tasks{0};
  std::atomic<std::size_t> covered{0};
  std::atomic<std::size_t> aborted_duplicate{0};
  std::atomic<std::size_t> midpoint_repairs{0};
  std::atomic<std::size_t> flat_rejections{0};

  SolveStats snapshot() const;
};

/// Shared state of one solve.
struct PlpContext {
  const StandardLP& lp;
  const ParametricObjective& pobj;
  PlpOptions options;
  bool homogeneous;
  PublishArray<Region> regions;
  BasisTable bases;
  AtomicStats stats;

  PlpContext(const StandardLP& lp, const ParametricObjective& pobj, PlpOptions options);

  /// Upper bound on the regions is_covered looks at. The rounds scheduler
  /// sets it to the store size at the start of each round, so all tasks of a
  /// round see the same regions whatever the thread count.
  std::atomic<std::size_t> visible{static_cast<std::size_t>(-1)};

  /// First published region covering mu; n_ready is re-read on every step so
  /// regions published during the scan are seen.
  std::optional<std::size_t> is_covered(std::span<const Rational> mu) const;

  Task initial_task() const;
  /// Moves the regions out and assembles edges and stats.
  PLPSolution finish();
};

/// Runs one task and returns the tasks it spawns.
std::vector<Task> process_task(const Task& task, PlpContext& ctx);

PLPSolution solve_parallel(const StandardLP& lp, const ParametricObjective& pobj, unsigned threads,
                           Scheduler scheduler = Scheduler::dynamic_pool, const PlpOptions& options = {});

const char* scheduler_name(Scheduler s);

}  // namespace pplp
