#include "pplp/parallel.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <thread>

namespace pplp {

SolveStats AtomicStats::snapshot() const {
  SolveStats s;
  s.tasks = tasks.load();
  s.covered = covered.load();
  s.aborted_duplicate = aborted_duplicate.load();
  s.midpoint_repairs = midpoint_repairs.load();
  s.flat_rejections = flat_rejections.load();
  return s;
}

PlpContext::PlpContext(const StandardLP& lp_, const ParametricObjective& pobj_, PlpOptions options_)
    : lp(lp_),
      pobj(pobj_),
      options(std::move(options_)),
      homogeneous(pobj_.homogeneous()),
      regions(options.store_capacity) {
  if (pobj.dim() != lp.cols()) throw std::invalid_argument("parametric objective does not match the LP");
}

std::optional<std::size_t> PlpContext::is_covered(std::span<const Rational> mu) const {
  std::vector<double> mu_float(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) mu_float[j] = mu[j].get_d();
  const std::size_t limit = visible.load(std::memory_order_acquire);
  for (std::size_t i = 0; i < std::min(regions.ready(), limit); ++i)
    if (regions[i].covers(mu, mu_float)) return i;
  return std::nullopt;
}

Task PlpContext::initial_task() const {
  Task t;
  t.probe = options.initial_probe.empty() ? RationalVector(pobj.parameters(), Rational(1)) : options.initial_probe;
  if (t.probe.size() != pobj.parameters()) throw std::invalid_argument("initial probe has the wrong dimension");
  return t;
}

PLPSolution PlpContext::finish() {
  PLPSolution sol;
  sol.regions = regions.drain();
  for (std::size_t i = 0; i < sol.regions.size(); ++i) sol.generation_edges.emplace_back(sol.regions[i].parent, i);
  sol.stats = stats.snapshot();
  sol.stats.regions = sol.regions.size();
  return sol;
}

namespace {

// Random nearby point, used when a probe sits on a lower-dimensional
// optimality set. Deterministic in (probe, attempt).
RationalVector perturb(const RationalVector& probe, unsigned attempt) {
  const std::string key = format_vector(probe) + "#" + std::to_string(attempt);
  std::mt19937_64 rng(std::hash<std::string>{}(key));
  std::uniform_int_distribution<long> dist(-1000, 1000);
  Rational norm = 1;
  for (const auto& v : probe)
    if (abs(v) + 1 > norm) norm = abs(v) + 1;
  Integer scale = 1;
  scale <<= 8 + attempt;
  const Rational eps = norm / Rational(scale * 1000);
  RationalVector out(probe.size());
  for (std::size_t j = 0; j < probe.size(); ++j) {
    long r = dist(rng);
    if (r == 0) r = 1;
    out[j] = probe[j] + eps * r;
  }
  return out;
}

}  // namespace

std::vector<Task> process_task(const Task& task, PlpContext& ctx) {
  ctx.stats.tasks.fetch_add(1, std::memory_order_relaxed);
  std::vector<Task> out;
  const RationalVector probe = ctx.homogeneous ? normalize_probe(task.probe) : task.probe;
  if (ctx.homogeneous && !probe.empty() &&
      std::all_of(probe.begin(), probe.end(), [](const Rational& v) { return sgn(v) == 0; }) && ctx.regions.ready() > 0)
    return out;  // the apex of every cone

  std::optional<std::size_t> cov = ctx.is_covered(probe);
  if (cov) {
    ctx.stats.covered.fetch_add(1, std::memory_order_relaxed);
  } else {
    bool trust_float = true;
    while (!cov) {
      auto result = compute_region(ctx.lp, ctx.pobj, probe, ctx.bases, ctx.options, trust_float);
      if (auto* region = std::get_if<Region>(&result)) {
        region->parent = task.from;
        const Basis basis = region->basis;
        auto owned = std::make_unique<Region>(std::move(*region));
        const Region& stored = *owned;
        const std::size_t idx = ctx.regions.push(std::move(owned));
        ctx.bases.publish(basis, idx);
        for (std::size_t i = 0; i < stored.constraints.size(); ++i) out.push_back(Task{idx, compute_next(stored, i)});
        cov = idx;
      } else if (auto* seen = std::get_if<AlreadySeen>(&result)) {
        ctx.stats.aborted_duplicate.fetch_add(1, std::memory_order_relaxed);
        if (seen->in_progress()) {
          // Another task is building this basis; retry once it is published.
          std::this_thread::yield();
          out.push_back(task);
          return out;
        }
        if (ctx.regions[*seen->region].covers(probe)) {
          cov = *seen->region;
        } else if (trust_float) {
          trust_float = false;  // the float basis was not optimal here
        } else {
          throw std::logic_error("certified basis does not cover its probe");
        }
      } else {
        ctx.stats.flat_rejections.fetch_add(1, std::memory_order_relaxed);
        if (task.perturbation >= ctx.options.max_perturbations)
          throw std::runtime_error("no full-dimensional region found near " + format_vector(probe));
        out.push_back(Task{task.from, perturb(probe, task.perturbation + 1), task.perturbation + 1, task.repair});
        return out;
      }
    }
  }

  if (task.from && *task.from != *cov) {
    const Region& from = ctx.regions[*task.from];
    const Region& to = ctx.regions[*cov];
    if (!are_adjacent(&from, to, probe)) {
      ctx.stats.midpoint_repairs.fetch_add(1, std::memory_order_relaxed);
      out.push_back(Task{task.from, midpoint(from, to, probe), 0, true});
    }
  }
  return out;
}

PLPSolution solve_sequential(const StandardLP& lp, const ParametricObjective& pobj, const PlpOptions& options) {
  PlpContext ctx(lp, pobj, options);
  std::deque<Task> work{ctx.initial_task()};
  while (!work.empty()) {
    Task t = std::move(work.front());
    work.pop_front();
    for (auto& child : process_task(t, ctx)) work.push_back(std::move(child));
  }
  return ctx.finish();
}

}  // namespace pplp
