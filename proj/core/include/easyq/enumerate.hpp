#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "easyq/partition.hpp"

namespace easyq {

/// Conjunctive filters for enumeration; combine with `|`.
enum class Filter : std::uint32_t {
  all = 0,
  pairing = 1u << 0,
  noncrossing = 1u << 1,
  even_blocks = 1u << 2,
  singletons_and_pairings = 1u << 3,
  matching = 1u << 4,
  half_classical = 1u << 5,
};

constexpr Filter operator|(Filter a, Filter b) noexcept {
  return static_cast<Filter>(static_cast<std::uint32_t>(a) | static_cast<std::uint32_t>(b));
}
constexpr bool has_filter(Filter set, Filter flag) noexcept {
  return (static_cast<std::uint32_t>(set) & static_cast<std::uint32_t>(flag)) != 0;
}

bool passes(Partition const& p, Filter filter);

class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t default_enumeration_bound = 16;

/// All partitions of the legs passing the filter, in canonical order
/// (restricted growth strings, upper row then lower row, lexicographic).
std::vector<Partition> enumerate(ColorWord const& upper, ColorWord const& lower,
                                 Filter filter = Filter::all,
                                 std::size_t bound = default_enumeration_bound);

/// Visits every partition of the legs passing `filter`, in canonical order.
void for_each_partition(ColorWord const& upper, ColorWord const& lower, Filter filter,
                        std::function<void(Partition const&)> const& visit,
                        std::size_t bound = default_enumeration_bound);

}  // namespace easyq
