#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace takeaway {

using Grundy = std::uint8_t;

/// Memo from position keys to Grundy values. Safe for concurrent readers and
/// writers; a key is only ever written with one value, so racing inserts of
/// the same entry are harmless.
class TranspositionTable {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t entries = 0;
  };

  std::optional<Grundy> find(const std::string& key) const;

  /// Throws InternalInconsistency if the key already maps to another value.
  void insert(const std::string& key, Grundy value);

  Stats stats() const;
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Grundy> entries_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

}  // namespace takeaway
