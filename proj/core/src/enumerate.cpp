#include "easyq/enumerate.hpp"

#include <string>

namespace easyq {

bool passes(Partition const& p, Filter filter) {
  if (has_filter(filter, Filter::pairing) && !is_pairing(p)) return false;
  if (has_filter(filter, Filter::even_blocks) && !has_even_blocks(p)) return false;
  if (has_filter(filter, Filter::singletons_and_pairings) && !has_blocks_of_size_at_most(p, 2)) {
    return false;
  }
  if (has_filter(filter, Filter::noncrossing) && !is_noncrossing(p)) return false;
  if (has_filter(filter, Filter::matching) && !blocks_matched(p)) return false;
  if (has_filter(filter, Filter::half_classical) && !blocks_alternation_balanced(p)) return false;
  return true;
}

namespace {

struct Generator {
  ColorWord const& upper;
  ColorWord const& lower;
  Filter filter;
  std::function<void(Partition const&)> const& visit;
  std::size_t n;
  std::size_t max_block;
  std::vector<int> labels;
  std::vector<std::size_t> sizes;

  void run(std::size_t leg, int used) {
    if (leg == n) {
      Partition p = Partition::from_labels(upper, lower, labels);
      if (passes(p, filter)) visit(p);
      return;
    }
    if (max_block == 2 && has_filter(filter, Filter::pairing)) {
      // open singletons must still be closable by the remaining legs
      std::size_t open = 0;
      for (int b = 0; b < used; ++b) open += sizes[static_cast<std::size_t>(b)] == 1;
      if (open > n - leg) return;
    }
    for (int b = 0; b <= used; ++b) {
      if (b < used && sizes[static_cast<std::size_t>(b)] >= max_block) continue;
      labels[leg] = b;
      if (b == used) sizes.push_back(0);
      ++sizes[static_cast<std::size_t>(b)];
      run(leg + 1, b == used ? used + 1 : used);
      --sizes[static_cast<std::size_t>(b)];
      if (b == used) sizes.pop_back();
    }
  }
};

}  // namespace

void for_each_partition(ColorWord const& upper, ColorWord const& lower, Filter filter,
                        std::function<void(Partition const&)> const& visit, std::size_t bound) {
  std::size_t const n = upper.size() + lower.size();
  if (n > bound) {
    throw BoundExceeded("enumeration of " + std::to_string(n) + " legs exceeds the bound " +
                        std::to_string(bound));
  }
  std::size_t max_block = n == 0 ? 1 : n;
  if (has_filter(filter, Filter::pairing) || has_filter(filter, Filter::singletons_and_pairings)) {
    max_block = 2;
  }
  if (has_filter(filter, Filter::pairing) && n % 2 == 1) return;
  Generator gen{upper, lower, filter, visit, n, max_block, std::vector<int>(n, 0), {}};
  gen.run(0, 0);
}

std::vector<Partition> enumerate(ColorWord const& upper, ColorWord const& lower, Filter filter,
                                 std::size_t bound) {
  std::vector<Partition> out;
  for_each_partition(upper, lower, filter, [&](Partition const& p) { out.push_back(p); }, bound);
  return out;
}

}  // namespace easyq
