#include "easyq/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "union_find.hpp"

namespace easyq {

ColorWord white_word(std::size_t length) { return ColorWord(length, Color::white); }

ColorWord inverted(ColorWord const& word) {
  ColorWord out(word.size());
  std::transform(word.begin(), word.end(), out.begin(), invert);
  return out;
}

ColorWord reversed(ColorWord const& word) { return ColorWord(word.rbegin(), word.rend()); }

ColorWord concat(ColorWord const& a, ColorWord const& b) {
  ColorWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ColorWord parse_color_word(std::string_view text) {
  if (text == "-") return {};
  ColorWord word;
  word.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'o': word.push_back(Color::white); break;
      case 'b': word.push_back(Color::black); break;
      default:
        throw ParseError("invalid color '" + std::string(1, ch) + "' (expected 'o' or 'b')");
    }
  }
  return word;
}

std::string format_color_word(ColorWord const& word) {
  if (word.empty()) return "-";
  std::string out;
  out.reserve(word.size());
  for (Color c : word) out.push_back(c == Color::white ? 'o' : 'b');
  return out;
}

Partition Partition::from_labels(ColorWord upper, ColorWord lower, std::span<int const> labels) {
  if (labels.size() != upper.size() + lower.size()) {
    throw ShapeMismatch("label count does not match the number of legs");
  }
  if (labels.size() > max_legs) throw std::length_error("too many legs");
  Partition p;
  p.upper_ = std::move(upper);
  p.lower_ = std::move(lower);
  p.labels_.resize(labels.size());
  std::vector<std::pair<int, std::uint8_t>> seen;
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](auto const& e) { return e.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], next);
      p.labels_[i] = next++;
    } else {
      p.labels_[i] = it->second;
    }
  }
  p.num_blocks_ = next;
  return p;
}

namespace {

std::size_t parse_leg(std::string_view token, std::size_t k, std::size_t l) {
  if (token.size() < 2 || (token[0] != 'u' && token[0] != 'd')) {
    throw ParseError("invalid leg '" + std::string(token) + "'");
  }
  std::size_t number = 0;
  for (char ch : token.substr(1)) {
    if (ch < '0' || ch > '9') throw ParseError("invalid leg '" + std::string(token) + "'");
    number = number * 10 + static_cast<std::size_t>(ch - '0');
  }
  if (token[0] == 'u') {
    if (number < 1 || number > k) throw ParseError("leg out of range: " + std::string(token));
    return number - 1;
  }
  if (number < 1 || number > l) throw ParseError("leg out of range: " + std::string(token));
  return k + number - 1;
}

}  // namespace

Partition Partition::parse(std::string_view literal) {
  auto const bar = literal.find('|');
  if (bar == std::string_view::npos) throw ParseError("partition literal lacks '|'");

  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };

  std::string_view const upper_text = trim(literal.substr(0, bar));
  std::string_view rest = literal.substr(bar + 1);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  std::size_t word_end = 0;
  while (word_end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[word_end])) &&
         rest[word_end] != '{') {
    ++word_end;
  }
  std::string_view const lower_text = rest.substr(0, word_end);
  std::string_view blocks_text = trim(rest.substr(word_end));

  ColorWord upper = parse_color_word(upper_text);
  ColorWord lower = parse_color_word(lower_text);
  std::size_t const k = upper.size();
  std::size_t const l = lower.size();

  std::vector<int> labels(k + l, -1);
  int block = 0;
  while (!blocks_text.empty()) {
    if (blocks_text.front() != '{') throw ParseError("expected '{' in partition literal");
    auto const close = blocks_text.find('}');
    if (close == std::string_view::npos) throw ParseError("unterminated block");
    std::string_view inner = blocks_text.substr(1, close - 1);
    bool any = false;
    while (!inner.empty()) {
      auto const comma = inner.find(',');
      std::string_view token = trim(inner.substr(0, comma));
      std::size_t const leg = parse_leg(token, k, l);
      if (labels[leg] != -1) throw ParseError("leg listed twice: " + std::string(token));
      labels[leg] = block;
      any = true;
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
    if (!any) throw ParseError("empty block");
    ++block;
    blocks_text = trim(blocks_text.substr(close + 1));
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw ParseError("some legs belong to no block");
  }
  return from_labels(std::move(upper), std::move(lower), labels);
}

std::string Partition::to_string() const {
  std::string out = format_color_word(upper_) + "|" + format_color_word(lower_);
  if (labels_.empty()) return out;
  out += ' ';
  for (auto const& block : blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      std::size_t const leg = block[i];
      out += leg < upper_.size() ? "u" + std::to_string(leg + 1)
                                 : "d" + std::to_string(leg - upper_.size() + 1);
    }
    out += '}';
  }
  return out;
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(num_blocks_);
  for (std::size_t leg = 0; leg < labels_.size(); ++leg) out[labels_[leg]].push_back(leg);
  return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes(num_blocks_, 0);
  for (auto label : labels_) ++sizes[label];
  return sizes;
}

std::vector<std::uint8_t> Partition::clockwise_labels() const {
  std::vector<std::uint8_t> out(labels_.size());
  for (std::size_t leg = 0; leg < labels_.size(); ++leg) out[clockwise_position(leg)] = labels_[leg];
  return out;
}

Partition Partition::recolored(ColorWord upper, ColorWord lower) const {
  if (upper.size() != upper_.size() || lower.size() != lower_.size()) {
    throw ShapeMismatch("recoloring changes the number of legs");
  }
  Partition p = *this;
  p.upper_ = std::move(upper);
  p.lower_ = std::move(lower);
  return p;
}

std::size_t Partition::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(upper_.size());
  mix(lower_.size());
  for (Color c : upper_) mix(static_cast<std::uint64_t>(c) + 11);
  for (Color c : lower_) mix(static_cast<std::uint64_t>(c) + 13);
  for (auto l : labels_) mix(l);
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(Partition const& a, Partition const& b) {
  if (auto c = a.upper_.size() <=> b.upper_.size(); c != 0) return c;
  if (auto c = a.lower_.size() <=> b.lower_.size(); c != 0) return c;
  if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
  if (auto c = a.lower_ <=> b.lower_; c != 0) return c;
  return a.labels_ <=> b.labels_;
}

Partition kernel(std::span<int const> indices, ColorWord colors) {
  if (indices.size() != colors.size()) {
    throw ShapeMismatch("kernel: index and color lengths differ");
  }
  return Partition::from_labels({}, std::move(colors), indices);
}

Partition kernel(std::span<int const> upper_indices, std::span<int const> lower_indices,
                 ColorWord upper, ColorWord lower) {
  if (upper_indices.size() != upper.size() || lower_indices.size() != lower.size()) {
    throw ShapeMismatch("kernel: index and color lengths differ");
  }
  std::vector<int> all(upper_indices.begin(), upper_indices.end());
  all.insert(all.end(), lower_indices.begin(), lower_indices.end());
  return Partition::from_labels(std::move(upper), std::move(lower), all);
}

namespace {

void require_same_shape(Partition const& p, Partition const& q, char const* what) {
  if (p.num_upper() != q.num_upper() || p.num_lower() != q.num_lower()) {
    throw ShapeMismatch(std::string(what) + ": partitions have different leg counts");
  }
}

using detail::UnionFind;

}  // namespace

Partition join(Partition const& p, Partition const& q) {
  require_same_shape(p, q, "join");
  std::size_t const n = p.num_legs();
  UnionFind uf(n);
  std::vector<int> first_p(p.num_blocks(), -1), first_q(q.num_blocks(), -1);
  for (std::size_t leg = 0; leg < n; ++leg) {
    auto& fp = first_p[p.label(leg)];
    if (fp < 0) fp = static_cast<int>(leg); else uf.unite(static_cast<std::size_t>(fp), leg);
    auto& fq = first_q[q.label(leg)];
    if (fq < 0) fq = static_cast<int>(leg); else uf.unite(static_cast<std::size_t>(fq), leg);
  }
  std::vector<int> labels(n);
  for (std::size_t leg = 0; leg < n; ++leg) labels[leg] = static_cast<int>(uf.find(leg));
  return Partition::from_labels(p.upper_colors(), p.lower_colors(), labels);
}

bool refines(Partition const& p, Partition const& q) {
  require_same_shape(p, q, "refines");
  // every block of p maps into a single block of q
  std::vector<int> image(p.num_blocks(), -1);
  for (std::size_t leg = 0; leg < p.num_legs(); ++leg) {
    int& target = image[p.label(leg)];
    if (target < 0) target = q.label(leg);
    else if (target != q.label(leg)) return false;
  }
  return true;
}

bool is_noncrossing(Partition const& p) {
  auto const seq = p.clockwise_labels();
  std::vector<std::size_t> remaining = p.block_sizes();
  std::vector<std::uint8_t> stack;
  std::vector<bool> opened(p.num_blocks(), false);
  for (auto label : seq) {
    if (!opened[label]) {
      opened[label] = true;
      if (--remaining[label] > 0) stack.push_back(label);
      continue;
    }
    if (stack.empty() || stack.back() != label) return false;
    if (--remaining[label] == 0) stack.pop_back();
  }
  return true;
}

bool is_pairing(Partition const& p) {
  auto const sizes = p.block_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });
}

bool has_even_blocks(Partition const& p) {
  auto const sizes = p.block_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s % 2 == 0; });
}

bool has_blocks_of_size_at_most(Partition const& p, std::size_t size) {
  auto const sizes = p.block_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s <= size; });
}

std::size_t interleaving_count(Partition const& p) {
  auto const seq = p.clockwise_labels();
  std::size_t const n = seq.size();
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (seq[b] == seq[a]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (seq[c] != seq[a]) continue;
        for (std::size_t d = c + 1; d < n; ++d)
          if (seq[d] == seq[b]) ++count;
      }
    }
  return count;
}

int signature(Partition const& p) {
  if (!has_even_blocks(p)) throw std::domain_error("signature: partition has an odd block");
  return interleaving_count(p) % 2 == 0 ? 1 : -1;
}

namespace {

// +1 for white, -1 for black, with the lower row inverted.
int effective_charge(Partition const& p, std::size_t leg) {
  Color c = p.color(leg);
  if (leg >= p.num_upper()) c = invert(c);
  return c == Color::white ? 1 : -1;
}

}  // namespace

bool blocks_color_balanced(Partition const& p) { return blocks_color_balanced_mod(p, 0); }

bool blocks_color_balanced_mod(Partition const& p, std::size_t modulus) {
  std::vector<long> charge(p.num_blocks(), 0);
  for (std::size_t leg = 0; leg < p.num_legs(); ++leg) charge[p.label(leg)] += effective_charge(p, leg);
  return std::all_of(charge.begin(), charge.end(), [&](long c) {
    if (modulus == 0) return c == 0;
    long const m = static_cast<long>(modulus);
    return ((c % m) + m) % m == 0;
  });
}

bool blocks_alternation_balanced(Partition const& p) {
  std::vector<long> charge(p.num_blocks(), 0);
  for (std::size_t leg = 0; leg < p.num_legs(); ++leg) {
    charge[p.label(leg)] += p.clockwise_position(leg) % 2 == 0 ? 1 : -1;
  }
  return std::all_of(charge.begin(), charge.end(), [](long c) { return c == 0; });
}

bool blocks_matched(Partition const& p) {
  std::vector<long> charge(p.num_blocks(), 0);
  for (std::size_t leg = 0; leg < p.num_legs(); ++leg) charge[p.label(leg)] += effective_charge(p, leg);
  auto const sizes = p.block_sizes();
  for (std::size_t b = 0; b < sizes.size(); ++b)
    if (sizes[b] >= 2 && charge[b] != 0) return false;
  return true;
}

Partition singletons(ColorWord upper, ColorWord lower) {
  std::vector<int> labels(upper.size() + lower.size());
  std::iota(labels.begin(), labels.end(), 0);
  return Partition::from_labels(std::move(upper), std::move(lower), labels);
}

Partition one_block(ColorWord upper, ColorWord lower) {
  std::vector<int> labels(upper.size() + lower.size(), 0);
  return Partition::from_labels(std::move(upper), std::move(lower), labels);
}

}  // namespace easyq
