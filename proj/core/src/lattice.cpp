#include "easyq/lattice.hpp"

#include <algorithm>

namespace easyq {

namespace {

Partition uncolored(Partition const& p) {
  return p.recolored(white_word(p.num_upper()), white_word(p.num_lower()));
}

}  // namespace

std::vector<Partition> interval(Partition const& lower, Partition const& upper) {
  if (!refines(lower, upper)) return {};
  std::size_t const m = lower.num_blocks();
  // the block of `upper` containing each block of `lower`
  std::vector<int> host(m, -1);
  for (std::size_t leg = 0; leg < lower.num_legs(); ++leg) host[lower.label(leg)] = upper.label(leg);

  std::vector<Partition> out;
  std::vector<int> group(m, 0);
  std::vector<int> group_host;
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == m) {
      std::vector<int> labels(lower.num_legs());
      for (std::size_t leg = 0; leg < lower.num_legs(); ++leg) labels[leg] = group[lower.label(leg)];
      out.push_back(Partition::from_labels(lower.upper_colors(), lower.lower_colors(), labels));
      return;
    }
    for (std::size_t g = 0; g < group_host.size(); ++g) {
      if (group_host[g] != host[b]) continue;
      group[b] = static_cast<int>(g);
      self(self, b + 1);
    }
    group[b] = static_cast<int>(group_host.size());
    group_host.push_back(host[b]);
    self(self, b + 1);
    group_host.pop_back();
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Rational MobiusFunction::operator()(Partition const& lower, Partition const& upper) {
  if (lower.num_upper() != upper.num_upper() || lower.num_lower() != upper.num_lower()) {
    throw ShapeMismatch("mobius: partitions have different leg counts");
  }
  if (!refines(lower, upper)) return 0;
  return Rational(evaluate(uncolored(lower), uncolored(upper)));
}

std::size_t MobiusFunction::cache_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

long MobiusFunction::evaluate(Partition const& lower, Partition const& upper) {
  if (lower == upper) return 1;
  Key key{lower, upper};
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  long sum = 0;
  for (auto const& middle : interval(lower, upper)) {
    if (middle == upper) continue;
    sum += evaluate(lower, middle);
  }
  long const value = -sum;
  std::lock_guard lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

Rational mobius(Partition const& lower, Partition const& upper) {
  static MobiusFunction table;
  return table(lower, upper);
}

}  // namespace easyq
