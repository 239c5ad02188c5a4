#pragma once

// Benchmark records and their CSV form.
//
// CSV columns:
//   kind,instance,threads,scheduler,rep,wall_s,regions,tasks,aborted_duplicate,
//   midpoint_repairs,mean_s,stddev_s,speedup
// kind is "run" for one repetition or "summary" for a (instance, scheduler,
// threads) group. Run rows leave the last three columns empty; summary rows
// leave rep and wall_s empty. stddev_s is the sample standard deviation and
// speedup is the threads=1 mean of the same group divided by this mean.

#include "pplp/parallel.hpp"
#include "pplp/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pplp::cli {

struct BenchRecord {
  std::string instance;
  unsigned threads = 1;
  Scheduler scheduler = Scheduler::dynamic_pool;
  std::size_t rep = 0;
  double wall_s = 0.0;
  SolveStats stats;
};

struct BenchSummary {
  std::string instance;
  unsigned threads = 1;
  Scheduler scheduler = Scheduler::dynamic_pool;
  std::size_t reps = 0;
  std::size_t regions = 0;
  double mean_s = 0.0;
  double stddev_s = 0.0;
  std::optional<double> speedup;  // missing when the group has no threads=1 run
};

struct BenchJob {
  std::string name;
  Polyhedron poly;
  std::vector<std::size_t> eliminate;
};

struct BenchConfig {
  std::vector<unsigned> threads{1};
  std::vector<Scheduler> schedulers{Scheduler::dynamic_pool};
  std::size_t reps = 10;
};

/// Runs the projections serially, timing only the solve.
std::vector<BenchRecord> run_bench(const std::vector<BenchJob>& jobs, const BenchConfig& config);
std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

std::string csv_header();
std::string csv_row(const BenchRecord& r);
std::string csv_row(const BenchSummary& s);

}  // namespace pplp::cli
