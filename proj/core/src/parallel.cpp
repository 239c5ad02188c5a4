#include "pplp/parallel.hpp"

#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

namespace pplp {

const char* scheduler_name(Scheduler s) {
  return s == Scheduler::fan_out_rounds ? "rounds" : "pool";
}

namespace {

void run_pool(PlpContext& ctx, unsigned threads) {
  std::mutex m;
  std::condition_variable cv;
  std::deque<Task> queue{ctx.initial_task()};
  std::size_t active = 0;
  bool stop = false;
  std::exception_ptr error;

  auto worker = [&] {
    std::unique_lock lock(m);
    for (;;) {
      cv.wait(lock, [&] { return stop || !queue.empty() || active == 0; });
      if (stop || queue.empty()) return;
      Task task = std::move(queue.front());
      queue.pop_front();
      ++active;
      lock.unlock();
      std::vector<Task> children;
      try {
        children = process_task(task, ctx);
      } catch (...) {
        lock.lock();
        if (!error) error = std::current_exception();
        stop = true;
        --active;
        cv.notify_all();
        return;
      }
      lock.lock();
      for (auto& c : children) queue.push_back(std::move(c));
      --active;
      if (queue.empty() && active == 0)
        cv.notify_all();
      else if (!children.empty())
        cv.notify_all();
    }
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
}

void run_rounds(PlpContext& ctx, unsigned threads) {
  std::vector<Task> round{ctx.initial_task()};
  while (!round.empty()) {
    ctx.visible.store(ctx.regions.ready(), std::memory_order_release);
    std::vector<std::vector<Task>> produced(round.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      try {
        for (std::size_t i; !failed.load() && (i = next.fetch_add(1)) < round.size();)
          produced[i] = process_task(round[i], ctx);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    };
    {
      const auto n = static_cast<unsigned>(std::min<std::size_t>(threads, round.size()));
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
      worker();
    }
    if (error) std::rethrow_exception(error);
    std::vector<Task> next_round;
    for (auto& p : produced)
      for (auto& t : p) next_round.push_back(std::move(t));
    round = std::move(next_round);
  }
}

}  // namespace

PLPSolution solve_parallel(const StandardLP& lp, const ParametricObjective& pobj, unsigned threads, Scheduler scheduler,
                           const PlpOptions& options) {
  if (threads == 0) throw std::invalid_argument("solve_parallel: threads must be >= 1");
  PlpContext ctx(lp, pobj, options);
  if (scheduler == Scheduler::dynamic_pool)
    run_pool(ctx, threads);
  else
    run_rounds(ctx, threads);
  return ctx.finish();
}

}  // namespace pplp
