#include "takeaway/transposition_table.hpp"

#include <mutex>

#include "takeaway/error.hpp"

namespace takeaway {

std::optional<Grundy> TranspositionTable::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void TranspositionTable::insert(const std::string& key, Grundy value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw Error(ErrorCode::InternalInconsistency,
                "transposition table entry rewritten with a different value");
  }
}

TranspositionTable::Stats TranspositionTable::stats() const {
  std::shared_lock lock(mutex_);
  return {hits_.load(std::memory_order_relaxed), misses_.load(std::memory_order_relaxed),
          entries_.size()};
}

std::size_t TranspositionTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void TranspositionTable::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  hits_ = 0;
  misses_ = 0;
}

}  // namespace takeaway
