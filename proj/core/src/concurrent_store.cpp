#include "pplp/concurrent_store.hpp"

namespace pplp {

std::size_t BasisTable::Hash::operator()(const std::vector<Index>& key) const noexcept {
  // FNV-1a over the indices.
  std::uint64_t h = 1469598103934665603ull;
  for (Index i : key) {
    h ^= i;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

BasisTable::Shard& BasisTable::shard_for(const std::vector<Index>& key) {
  return shards_[Hash{}(key) % kShards];
}

bool BasisTable::test_and_insert(const Basis& basis) {
  auto& shard = shard_for(basis.nonbasic);
  std::lock_guard lock(shard.mutex);
  return !shard.entries.try_emplace(basis.nonbasic).second;
}

BasisTable::Claim BasisTable::claim(const Basis& basis) {
  auto& shard = shard_for(basis.nonbasic);
  std::lock_guard lock(shard.mutex);
  auto [it, inserted] = shard.entries.try_emplace(basis.nonbasic);
  if (inserted) return {Claim::Kind::claimed};
  Entry& e = it->second;
  switch (e.state) {
    case State::failed:
      e.state = State::in_progress;
      return {Claim::Kind::claimed};
    case State::in_progress: return {Claim::Kind::in_progress};
    case State::published: return {Claim::Kind::published, e.region};
  }
  return {Claim::Kind::in_progress};
}

void BasisTable::publish(const Basis& basis, std::size_t region) {
  auto& shard = shard_for(basis.nonbasic);
  std::lock_guard lock(shard.mutex);
  Entry& e = shard.entries[basis.nonbasic];
  e.state = State::published;
  e.region = region;
}

void BasisTable::fail(const Basis& basis) {
  auto& shard = shard_for(basis.nonbasic);
  std::lock_guard lock(shard.mutex);
  shard.entries[basis.nonbasic].state = State::failed;
}

std::size_t BasisTable::size() const {
  std::size_t n = 0;
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mutex);
    n += shard.entries.size();
  }
  return n;
}

}  // namespace pplp
