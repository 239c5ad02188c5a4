#pragma once

// Shared structures for the task-parallel solver: a grow-only array with a
// publish index, and a concurrent set of bases.

#include "pplp/lp.hpp"

#include <array>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pplp {

class CapacityExhausted : public std::runtime_error {
public:
  CapacityExhausted() : std::runtime_error("region store capacity exhausted") {}
};

/// Grow-only array with a fixed capacity.
///
/// push() claims a slot by incrementing n_fill, writes it, then waits until
/// every earlier slot is published before advancing n_ready past its own.
/// Readers only look at slots below n_ready, which are immutable.
template <class T>
class PublishArray {
public:
  explicit PublishArray(std::size_t capacity)
      : capacity_(capacity), slots_(std::make_unique<std::unique_ptr<T>[]>(capacity)) {}

  PublishArray(const PublishArray&) = delete;
  PublishArray& operator=(const PublishArray&) = delete;

  std::size_t push(std::unique_ptr<T> item) {
    const std::size_t i = n_fill_.fetch_add(1, std::memory_order_acq_rel);
    if (i >= capacity_) throw CapacityExhausted();
    slots_[i] = std::move(item);
    for (std::size_t cur = n_ready_.load(std::memory_order_acquire); cur != i;
         cur = n_ready_.load(std::memory_order_acquire)) {
      n_ready_.wait(cur, std::memory_order_acquire);
    }
    n_ready_.store(i + 1, std::memory_order_release);
    n_ready_.notify_all();
    return i;
  }

  std::size_t ready() const noexcept { return n_ready_.load(std::memory_order_acquire); }
  std::size_t filled() const noexcept { return n_fill_.load(std::memory_order_acquire); }
  std::size_t capacity() const noexcept { return capacity_; }

  /// Requires i < ready().
  const T& operator[](std::size_t i) const { return *slots_[i]; }

  /// Moves all published items out. Only valid once no writer is active.
  std::vector<T> drain() {
    std::vector<T> out;
    const std::size_t n = ready();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::move(*slots_[i]));
    return out;
  }

private:
  std::size_t capacity_;
  std::unique_ptr<std::unique_ptr<T>[]> slots_;
  std::atomic<std::size_t> n_fill_{0};
  std::atomic<std::size_t> n_ready_{0};
};

/// Set of bases keyed by their sorted nonbasic indices. Besides plain
/// membership each entry tracks whether its region is being built, was
/// published, or could not be built (so another task may take it over).
class BasisTable {
public:
  enum class State { in_progress, published, failed };

  struct Claim {
    enum class Kind { claimed, in_progress, published } kind;
    std::size_t region = 0;  // when published
  };

  /// True iff the key was already present; otherwise inserts it.
  bool test_and_insert(const Basis& basis);

  /// Inserts as in_progress and returns `claimed`, or takes over a failed
  /// entry. Otherwise reports the current owner state.
  Claim claim(const Basis& basis);
  void publish(const Basis& basis, std::size_t region);
  void fail(const Basis& basis);

  std::size_t size() const;

private:
  struct Hash {
    std::size_t operator()(const std::vector<Index>& key) const noexcept;
  };
  struct Entry {
    State state = State::in_progress;
    std::size_t region = 0;
  };
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::vector<Index>, Entry, Hash> entries;
  };
  static constexpr std::size_t kShards = 64;

  Shard& shard_for(const std::vector<Index>& key);

  std::array<Shard, kShards> shards_;
};

}  // namespace pplp
