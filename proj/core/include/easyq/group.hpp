#pragma once

#include <string>
#include <string_view>

#include "easyq/category.hpp"

namespace easyq {

enum class GroupId {
  S, S_plus,
  O, O_plus, O_star,
  U, U_plus, U_star,
  H, H_plus, H_star,
  K, K_plus, K_star,
  B, B_plus,
  C, C_plus,
};

/// A group of the easy family, possibly twisted (only for categories of even blocks).
struct Group {
  GroupId id = GroupId::S;
  bool twisted = false;
  friend bool operator==(Group const&, Group const&) = default;
};

/// Short symbol such as "S+", "O*", "K".
std::string_view group_symbol(GroupId id);

/// Symbol with a "bar" suffix when twisted.
std::string group_name(Group g);

/// Accepts "O+", "O_plus", "U*", "U_star" and a trailing "bar" for the twist.
/// Throws ParseError on unknown names and std::invalid_argument when the twist
/// is requested outside even categories.
Group parse_group(std::string_view text);

CategorySpec group_category(GroupId id);

/// Orthogonal-type groups with real coordinates, where colors play no role.
bool is_real(GroupId id);

}  // namespace easyq
