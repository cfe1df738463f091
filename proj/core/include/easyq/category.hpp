#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "easyq/enumerate.hpp"
#include "easyq/partition.hpp"

namespace easyq {

enum class CategoryId {
  P,
  NC,
  P2,
  NC2,
  P_even,
  NC_even,
  P2_star,
  P_even_star,
  P12,
  NC12,
  Mcal_P2,
  Mcal_NC2,
  Mcal_P_even,
  Mcal_NC_even,
  Mcal_P12,
  Mcal_NC12,
  Mcal_P2_star,
  Mcal_P_even_star,
  // blocks with (#white - #black) divisible by a modulus; modulus 0 is exact balance
  P_mod,
  NC_mod,
};

std::string_view category_name(CategoryId id);

/// Whether the choice of leg colors affects membership.
bool is_colored(CategoryId id);

/// Which diagrams are seeded into a closure: white identities and the white
/// semicircle only, or both colorings of each.
enum class Regime { uncolored, colored };

class GeneratedCategory;

/// A named category of partitions, or a materialized generator closure.
class CategorySpec {
 public:
  CategorySpec() = default;

  static CategorySpec named(CategoryId id);
  static CategorySpec modular(bool noncrossing, std::size_t modulus);
  static CategorySpec generated(std::shared_ptr<GeneratedCategory const> closure);

  /// Accepts the names produced by `name()`, e.g. "NC2", "Mcal_P_even", "P_mod3".
  static CategorySpec parse(std::string_view text);

  bool is_named() const noexcept { return closure_ == nullptr; }
  CategoryId id() const noexcept { return id_; }
  std::size_t modulus() const noexcept { return modulus_; }
  std::shared_ptr<GeneratedCategory const> const& closure() const noexcept { return closure_; }

  std::string name() const;

  /// Named categories whose blocks all have even size.
  bool within_even() const;

 private:
  CategoryId id_ = CategoryId::P;
  std::size_t modulus_ = 0;
  std::shared_ptr<GeneratedCategory const> closure_;
};

/// Side-by-side concatenation [pq].
Partition tensor(Partition const& p, Partition const& q);

struct Composite {
  Partition result;
  std::size_t loops = 0;
};

/// Glues the lower row of `top` onto the upper row of `bottom`. The loops are
/// the connected components living entirely in the glued middle row. Throws
/// ShapeMismatch when the middle color words differ.
Composite compose(Partition const& top, Partition const& bottom);

/// Upside-down turn with all colors inverted.
Partition adjoint(Partition const& p);

Partition identity(ColorWord const& word);

/// One-line pair on two lower legs with the given colors.
Partition semicircle(Color left, Color right);

/// Two-row crossing (upper a b, lower b a).
Partition crossing(Color a, Color b);

/// The 3+3 diagram joining u1-d3, u2-d2, u3-d1.
Partition half_classical_crossing(Color a, Color b, Color c);

bool member(CategorySpec const& cat, Partition const& p);

/// Members of D(upper, lower), canonical order.
std::vector<Partition> category_set(CategorySpec const& cat, ColorWord const& upper,
                                    ColorWord const& lower);

/// Closure of a set of generators under the category operations, materialized
/// up to a leg bound.
class GeneratedCategory {
 public:
  using Shape = std::pair<ColorWord, ColorWord>;

  std::size_t leg_bound() const noexcept { return leg_bound_; }
  std::size_t working_bound() const noexcept { return working_bound_; }
  Regime regime() const noexcept { return regime_; }
  std::vector<Partition> const& generators() const noexcept { return generators_; }

  bool contains(Partition const& p) const;

  /// Members of the given shape, canonical order. Throws BoundExceeded past the bound.
  std::vector<Partition> const& members(ColorWord const& upper, ColorWord const& lower) const;

  /// Every member within the leg bound, canonical order.
  std::vector<Partition> all_members() const;

  std::size_t size() const noexcept;

 private:
  friend std::shared_ptr<GeneratedCategory const> closure(std::vector<Partition> const&,
                                                          std::size_t, Regime,
                                                          std::optional<std::size_t>);

  std::size_t leg_bound_ = 0;
  std::size_t working_bound_ = 0;
  Regime regime_ = Regime::uncolored;
  std::vector<Partition> generators_;
  std::map<Shape, std::vector<Partition>> by_shape_;
};

inline constexpr std::size_t max_closure_bound = 10;

/// Least family containing the generators, identities and semicircles that is
/// stable under tensor, compose and adjoint. Intermediate diagrams may carry up
/// to `working_bound` legs (default leg_bound + 2); only members with at most
/// `leg_bound` legs are kept.
std::shared_ptr<GeneratedCategory const> closure(std::vector<Partition> const& generators,
                                                 std::size_t leg_bound, Regime regime,
                                                 std::optional<std::size_t> working_bound = {});

struct AxiomReport {
  std::size_t checked_elements = 0;
  std::size_t checked_operations = 0;
  std::vector<std::string> defects;
  bool ok() const noexcept { return defects.empty(); }
};

/// Checks identities, semicircles and stability under the three operations on
/// every member with at most `leg_bound` legs.
AxiomReport verify_axioms(CategorySpec const& cat, std::size_t leg_bound, Regime regime);

/// All color words of a given length (white-only in the uncolored regime).
std::vector<ColorWord> color_words(std::size_t length, Regime regime);

}  // namespace easyq
