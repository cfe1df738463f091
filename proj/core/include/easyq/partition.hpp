#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace easyq {

/// Leg color: white is the exponent 1 (symbol o), black the conjugate (symbol b).
enum class Color : std::uint8_t { white = 0, black = 1 };

constexpr Color invert(Color c) noexcept {
  return c == Color::white ? Color::black : Color::white;
}

using ColorWord = std::vector<Color>;

ColorWord white_word(std::size_t length);
ColorWord inverted(ColorWord const& word);
ColorWord reversed(ColorWord const& word);
ColorWord concat(ColorWord const& a, ColorWord const& b);

/// Parses a word over 'o' and 'b'; "-" and "" denote the empty word.
ColorWord parse_color_word(std::string_view text);
std::string format_color_word(ColorWord const& word);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A colored two-row set partition.
///
/// Legs are numbered 0..k-1 along the upper row (u1..uk) and k..k+l-1 along the
/// lower row (d1..dl). Block labels are stored as a restricted growth string over
/// this leg order, so blocks are ordered by their smallest leg.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes arbitrary labels (equal labels mean the same block).
  static Partition from_labels(ColorWord upper, ColorWord lower, std::span<int const> labels);

  static Partition one_line(ColorWord lower, std::span<int const> labels) {
    return from_labels({}, std::move(lower), labels);
  }

  /// Parses the literal grammar `<upper>|<lower> {u1,d2}{u2,d1}`.
  static Partition parse(std::string_view literal);

  std::string to_string() const;

  std::size_t num_upper() const noexcept { return upper_.size(); }
  std::size_t num_lower() const noexcept { return lower_.size(); }
  std::size_t num_legs() const noexcept { return labels_.size(); }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  bool is_one_line() const noexcept { return upper_.empty(); }

  ColorWord const& upper_colors() const noexcept { return upper_; }
  ColorWord const& lower_colors() const noexcept { return lower_; }
  Color color(std::size_t leg) const {
    return leg < upper_.size() ? upper_[leg] : lower_[leg - upper_.size()];
  }

  /// Block label of each leg, in leg order.
  std::span<std::uint8_t const> labels() const noexcept { return labels_; }
  std::uint8_t label(std::size_t leg) const { return labels_[leg]; }

  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> block_sizes() const;

  /// Position of a leg when the legs are read clockwise: upper row left to
  /// right, then lower row right to left.
  std::size_t clockwise_position(std::size_t leg) const noexcept {
    return leg < upper_.size() ? leg : upper_.size() + lower_.size() - 1 - (leg - upper_.size());
  }

  /// Block labels read in clockwise order.
  std::vector<std::uint8_t> clockwise_labels() const;

  /// Same blocks with new colors (sizes must match).
  Partition recolored(ColorWord upper, ColorWord lower) const;

  std::size_t hash() const noexcept;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend std::strong_ordering operator<=>(Partition const& a, Partition const& b);

 private:
  ColorWord upper_;
  ColorWord lower_;
  std::vector<std::uint8_t> labels_;
  std::size_t num_blocks_ = 0;
};

inline constexpr std::size_t max_legs = 64;

/// One-line kernel: legs share a block iff the indices agree.
Partition kernel(std::span<int const> indices, ColorWord colors);

/// Two-row kernel of (upper indices over lower indices).
Partition kernel(std::span<int const> upper_indices, std::span<int const> lower_indices,
                 ColorWord upper, ColorWord lower);

inline std::size_t num_blocks(Partition const& p) { return p.num_blocks(); }

/// Finest partition coarser than both (same shape required). Colors come from p.
Partition join(Partition const& p, Partition const& q);

/// p <= q in the refinement order: every block of p lies inside a block of q.
bool refines(Partition const& p, Partition const& q);

bool is_noncrossing(Partition const& p);
bool is_pairing(Partition const& p);
bool has_even_blocks(Partition const& p);
bool has_blocks_of_size_at_most(Partition const& p, std::size_t size);

/// Number of crossing quadruples between distinct blocks, clockwise.
std::size_t interleaving_count(Partition const& p);

/// Signature (+1/-1) of a partition with even blocks. Throws std::domain_error
/// when an odd block is present.
int signature(Partition const& p);

/// Every block has as many white as black legs once lower-row colors are
/// inverted (strings join o-o or b-b vertically and o-b horizontally).
bool blocks_color_balanced(Partition const& p);

/// Every block has (#white - #black) divisible by modulus, after inverting the
/// lower row. modulus 0 means exact balance.
bool blocks_color_balanced_mod(Partition const& p, std::size_t modulus);

/// Relabelling the legs clockwise o b o b ..., every block is balanced.
bool blocks_alternation_balanced(Partition const& p);

/// Every block with at least two legs is color-balanced; singletons are unconstrained.
bool blocks_matched(Partition const& p);

Partition singletons(ColorWord upper, ColorWord lower);
Partition one_block(ColorWord upper, ColorWord lower);

}  // namespace easyq

template <>
struct std::hash<easyq::Partition> {
  std::size_t operator()(easyq::Partition const& p) const noexcept { return p.hash(); }
};
