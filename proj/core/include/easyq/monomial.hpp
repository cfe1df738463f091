#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "easyq/partition.hpp"

namespace easyq {

/// One coordinate u_{ij} (white) or its adjoint u*_{ij} (black); indices are 1-based.
struct Factor {
  int i = 1;
  int j = 1;
  Color color = Color::white;
  friend bool operator==(Factor const&, Factor const&) = default;
};

struct MonomialSpec {
  std::vector<Factor> factors;

  std::size_t degree() const noexcept { return factors.size(); }
  ColorWord word() const;
  std::vector<int> rows() const;
  std::vector<int> cols() const;
  int max_index() const;

  friend bool operator==(MonomialSpec const&, MonomialSpec const&) = default;
};

/// Parses a product such as "u[1,1] u*[2,3] u[2,2]^3"; "1" or the empty string is
/// the empty product.
MonomialSpec parse_monomial(std::string_view text);

std::string format_monomial(MonomialSpec const& m);

/// Parses a comma or space separated list of positive integers, e.g. "1,1,2".
std::vector<int> parse_index_list(std::string_view text);

}  // namespace easyq
