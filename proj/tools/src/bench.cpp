#include "bench.hpp"

#include "pplp/projection.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace pplp::cli {

std::vector<BenchRecord> run_bench(const std::vector<BenchJob>& jobs, const BenchConfig& config) {
  std::vector<BenchRecord> out;
  for (const auto& job : jobs) {
    for (Scheduler sched : config.schedulers) {
      for (unsigned threads : config.threads) {
        for (std::size_t rep = 0; rep < config.reps; ++rep) {
          ProjectOptions opts;
          opts.threads = threads;
          opts.scheduler = sched;
          const auto start = std::chrono::steady_clock::now();
          auto res = project_detailed(job.poly, job.eliminate, opts);
          const auto stop = std::chrono::steady_clock::now();
          BenchRecord r;
          r.instance = job.name;
          r.threads = threads;
          r.scheduler = sched;
          r.rep = rep;
          r.wall_s = std::chrono::duration<double>(stop - start).count();
          r.stats = res.stats;
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  using Key = std::tuple<std::string, int, unsigned>;
  std::map<Key, std::vector<const BenchRecord*>> groups;
  std::vector<Key> order;
  for (const auto& r : records) {
    Key key{r.instance, static_cast<int>(r.scheduler), r.threads};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }
  std::vector<BenchSummary> out;
  std::map<std::pair<std::string, int>, double> base;
  for (const auto& key : order) {
    const auto& g = groups[key];
    BenchSummary s;
    s.instance = std::get<0>(key);
    s.scheduler = static_cast<Scheduler>(std::get<1>(key));
    s.threads = std::get<2>(key);
    s.reps = g.size();
    s.regions = g.front()->stats.regions;
    for (const auto* r : g) s.mean_s += r->wall_s;
    s.mean_s /= double(g.size());
    if (g.size() > 1) {
      double ss = 0;
      for (const auto* r : g) ss += (r->wall_s - s.mean_s) * (r->wall_s - s.mean_s);
      s.stddev_s = std::sqrt(ss / double(g.size() - 1));
    }
    if (s.threads == 1) base[{s.instance, std::get<1>(key)}] = s.mean_s;
    out.push_back(s);
  }
  for (auto& s : out) {
    auto it = base.find({s.instance, static_cast<int>(s.scheduler)});
    if (it != base.end()) s.speedup = s.threads == 1 ? 1.0 : it->second / s.mean_s;
  }
  return out;
}

std::string csv_header() {
  return "kind,instance,threads,scheduler,rep,wall_s,regions,tasks,aborted_duplicate,midpoint_repairs,mean_s,"
         "stddev_s,speedup";
}

std::string csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out.precision(9);
  out << "run," << r.instance << ',' << r.threads << ',' << scheduler_name(r.scheduler) << ',' << r.rep << ','
      << r.wall_s << ',' << r.stats.regions << ',' << r.stats.tasks << ',' << r.stats.aborted_duplicate << ','
      << r.stats.midpoint_repairs << ",,,";
  return out.str();
}

std::string csv_row(const BenchSummary& s) {
  std::ostringstream out;
  out.precision(9);
  out << "summary," << s.instance << ',' << s.threads << ',' << scheduler_name(s.scheduler) << ",,," << s.regions
      << ",,,," << s.mean_s << ',' << s.stddev_s << ',';
  if (s.speedup) out << *s.speedup;
  return out.str();
}

}  // namespace pplp::cli
