#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "easyq/partition.hpp"
#include "easyq/rational.hpp"

namespace easyq {

/// All tau with lower <= tau <= upper in the refinement order, canonical order.
/// Empty when lower does not refine upper.
std::vector<Partition> interval(Partition const& lower, Partition const& upper);

/// Moebius function of the partition lattice, by the defining recursion
/// mu(s,s) = 1, mu(s,p) = -sum_{s <= t < p} mu(s,t), and 0 when s does not refine p.
/// Values are memoized per instance; the table is safe for concurrent callers.
class MobiusFunction {
 public:
  Rational operator()(Partition const& lower, Partition const& upper);

  std::size_t cache_size() const;

 private:
  struct Key {
    Partition lower;
    Partition upper;
    bool operator==(Key const&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(Key const& k) const noexcept {
      return k.lower.hash() * 31 + k.upper.hash();
    }
  };

  long evaluate(Partition const& lower, Partition const& upper);

  mutable std::mutex mutex_;
  std::unordered_map<Key, long, KeyHash> memo_;
};

/// Convenience wrapper over a process-wide table.
Rational mobius(Partition const& lower, Partition const& upper);

}  // namespace easyq
