#include "easyq/group.hpp"

#include <array>
#include <stdexcept>

namespace easyq {

namespace {

struct Entry {
  GroupId id;
  std::string_view symbol;
  std::string_view long_name;
  CategoryId category;
  bool real;
};

constexpr std::array<Entry, 18> entries{{
    {GroupId::S, "S", "S", CategoryId::P, true},
    {GroupId::S_plus, "S+", "S_plus", CategoryId::NC, true},
    {GroupId::O, "O", "O", CategoryId::P2, true},
    {GroupId::O_plus, "O+", "O_plus", CategoryId::NC2, true},
    {GroupId::O_star, "O*", "O_star", CategoryId::P2_star, true},
    {GroupId::U, "U", "U", CategoryId::Mcal_P2, false},
    {GroupId::U_plus, "U+", "U_plus", CategoryId::Mcal_NC2, false},
    {GroupId::U_star, "U*", "U_star", CategoryId::Mcal_P2_star, false},
    {GroupId::H, "H", "H", CategoryId::P_even, true},
    {GroupId::H_plus, "H+", "H_plus", CategoryId::NC_even, true},
    {GroupId::H_star, "H*", "H_star", CategoryId::P_even_star, true},
    {GroupId::K, "K", "K", CategoryId::Mcal_P_even, false},
    {GroupId::K_plus, "K+", "K_plus", CategoryId::Mcal_NC_even, false},
    {GroupId::K_star, "K*", "K_star", CategoryId::Mcal_P_even_star, false},
    {GroupId::B, "B", "B", CategoryId::P12, true},
    {GroupId::B_plus, "B+", "B_plus", CategoryId::NC12, true},
    {GroupId::C, "C", "C", CategoryId::Mcal_P12, false},
    {GroupId::C_plus, "C+", "C_plus", CategoryId::Mcal_NC12, false},
}};

Entry const& entry(GroupId id) {
  for (auto const& e : entries)
    if (e.id == id) return e;
  throw std::logic_error("unknown group id");
}

}  // namespace

std::string_view group_symbol(GroupId id) { return entry(id).symbol; }

std::string group_name(Group g) {
  std::string out(group_symbol(g.id));
  if (g.twisted) out += "bar";
  return out;
}

Group parse_group(std::string_view text) {
  Group g;
  constexpr std::string_view suffix = "bar";
  if (text.size() > suffix.size() && text.substr(text.size() - suffix.size()) == suffix) {
    g.twisted = true;
    text.remove_suffix(suffix.size());
  }
  for (auto const& e : entries) {
    if (text == e.symbol || text == e.long_name) {
      g.id = e.id;
      if (g.twisted && !group_category(e.id).within_even()) {
        throw std::invalid_argument("the twist of " + std::string(e.symbol) +
                                    " is undefined: its category has odd blocks");
      }
      return g;
    }
  }
  throw ParseError("unknown group '" + std::string(text) + "'");
}

CategorySpec group_category(GroupId id) { return CategorySpec::named(entry(id).category); }

bool is_real(GroupId id) { return entry(id).real; }

}  // namespace easyq
