#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace pairloc {

/// Map whose entries are computed at most once and never replaced. Concurrent
/// readers share a lock; a racing second computation is discarded in favour of
/// the first stored value.
template <class Key, class Value>
class WriteOnceCache {
 public:
  template <class Fn>
  std::shared_ptr<const Value> get_or_compute(const Key& key, Fn&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> entries_;
};

}  // namespace pairloc
