#include "easyq/category.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "union_find.hpp"

namespace easyq {

namespace {

struct NamedEntry {
  CategoryId id;
  std::string_view name;
};

constexpr std::array<NamedEntry, 18> named_entries{{
    {CategoryId::P, "P"},
    {CategoryId::NC, "NC"},
    {CategoryId::P2, "P2"},
    {CategoryId::NC2, "NC2"},
    {CategoryId::P_even, "P_even"},
    {CategoryId::NC_even, "NC_even"},
    {CategoryId::P2_star, "P2_star"},
    {CategoryId::P_even_star, "P_even_star"},
    {CategoryId::P12, "P12"},
    {CategoryId::NC12, "NC12"},
    {CategoryId::Mcal_P2, "Mcal_P2"},
    {CategoryId::Mcal_NC2, "Mcal_NC2"},
    {CategoryId::Mcal_P_even, "Mcal_P_even"},
    {CategoryId::Mcal_NC_even, "Mcal_NC_even"},
    {CategoryId::Mcal_P12, "Mcal_P12"},
    {CategoryId::Mcal_NC12, "Mcal_NC12"},
    {CategoryId::Mcal_P2_star, "Mcal_P2_star"},
    {CategoryId::Mcal_P_even_star, "Mcal_P_even_star"},
}};

Filter enumeration_filter(CategoryId id) {
  switch (id) {
    case CategoryId::P:
    case CategoryId::P_mod:
      return Filter::all;
    case CategoryId::NC:
    case CategoryId::NC_mod:
      return Filter::noncrossing;
    case CategoryId::P2:
      return Filter::pairing;
    case CategoryId::NC2:
      return Filter::pairing | Filter::noncrossing;
    case CategoryId::P_even:
      return Filter::even_blocks;
    case CategoryId::NC_even:
      return Filter::even_blocks | Filter::noncrossing;
    case CategoryId::P2_star:
      return Filter::pairing | Filter::half_classical;
    case CategoryId::P_even_star:
      return Filter::even_blocks | Filter::half_classical;
    case CategoryId::P12:
      return Filter::singletons_and_pairings;
    case CategoryId::NC12:
      return Filter::singletons_and_pairings | Filter::noncrossing;
    case CategoryId::Mcal_P2:
      return Filter::pairing | Filter::matching;
    case CategoryId::Mcal_NC2:
      return Filter::pairing | Filter::noncrossing | Filter::matching;
    case CategoryId::Mcal_P_even:
      return Filter::even_blocks | Filter::matching;
    case CategoryId::Mcal_NC_even:
      return Filter::even_blocks | Filter::noncrossing | Filter::matching;
    case CategoryId::Mcal_P12:
      return Filter::singletons_and_pairings | Filter::matching;
    case CategoryId::Mcal_NC12:
      return Filter::singletons_and_pairings | Filter::noncrossing | Filter::matching;
    case CategoryId::Mcal_P2_star:
      return Filter::pairing | Filter::matching | Filter::half_classical;
    case CategoryId::Mcal_P_even_star:
      return Filter::even_blocks | Filter::matching | Filter::half_classical;
  }
  return Filter::all;
}

bool named_member(CategorySpec const& cat, Partition const& p) {
  if (!passes(p, enumeration_filter(cat.id()))) return false;
  if (cat.id() == CategoryId::P_mod || cat.id() == CategoryId::NC_mod) {
    return blocks_color_balanced_mod(p, cat.modulus());
  }
  return true;
}

Partition whitened(Partition const& p) {
  return p.recolored(white_word(p.num_upper()), white_word(p.num_lower()));
}

}  // namespace

std::string_view category_name(CategoryId id) {
  if (id == CategoryId::P_mod) return "P_mod";
  if (id == CategoryId::NC_mod) return "NC_mod";
  for (auto const& e : named_entries)
    if (e.id == id) return e.name;
  return "?";
}

bool is_colored(CategoryId id) {
  switch (id) {
    case CategoryId::Mcal_P2:
    case CategoryId::Mcal_NC2:
    case CategoryId::Mcal_P_even:
    case CategoryId::Mcal_NC_even:
    case CategoryId::Mcal_P12:
    case CategoryId::Mcal_NC12:
    case CategoryId::Mcal_P2_star:
    case CategoryId::Mcal_P_even_star:
    case CategoryId::P_mod:
    case CategoryId::NC_mod:
      return true;
    default:
      return false;
  }
}

CategorySpec CategorySpec::named(CategoryId id) {
  CategorySpec spec;
  spec.id_ = id;
  return spec;
}

CategorySpec CategorySpec::modular(bool noncrossing, std::size_t modulus) {
  CategorySpec spec;
  spec.id_ = noncrossing ? CategoryId::NC_mod : CategoryId::P_mod;
  spec.modulus_ = modulus;
  return spec;
}

CategorySpec CategorySpec::generated(std::shared_ptr<GeneratedCategory const> closure) {
  if (!closure) throw std::invalid_argument("generated category without a closure");
  CategorySpec spec;
  spec.closure_ = std::move(closure);
  return spec;
}

CategorySpec CategorySpec::parse(std::string_view text) {
  for (auto const& e : named_entries)
    if (e.name == text) return named(e.id);
  for (bool nc : {false, true}) {
    std::string_view const prefix = nc ? "NC_mod" : "P_mod";
    if (text.substr(0, prefix.size()) != prefix) continue;
    auto digits = text.substr(prefix.size());
    std::size_t modulus = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), modulus);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) break;
    return modular(nc, modulus);
  }
  throw ParseError("unknown category '" + std::string(text) + "'");
}

std::string CategorySpec::name() const {
  if (!is_named()) return "generated";
  std::string out(category_name(id_));
  if (id_ == CategoryId::P_mod || id_ == CategoryId::NC_mod) out += std::to_string(modulus_);
  return out;
}

bool CategorySpec::within_even() const {
  if (!is_named()) return false;
  switch (id_) {
    case CategoryId::P2:
    case CategoryId::NC2:
    case CategoryId::P_even:
    case CategoryId::NC_even:
    case CategoryId::P2_star:
    case CategoryId::P_even_star:
    case CategoryId::Mcal_P2:
    case CategoryId::Mcal_NC2:
    case CategoryId::Mcal_P_even:
    case CategoryId::Mcal_NC_even:
    case CategoryId::Mcal_P2_star:
    case CategoryId::Mcal_P_even_star:
      return true;
    case CategoryId::P_mod:
    case CategoryId::NC_mod:
      return modulus_ % 2 == 0;
    default:
      return false;
  }
}

Partition tensor(Partition const& p, Partition const& q) {
  std::size_t const pk = p.num_upper(), pl = p.num_lower();
  std::size_t const qk = q.num_upper(), ql = q.num_lower();
  int const shift = static_cast<int>(p.num_blocks());
  std::vector<int> labels;
  labels.reserve(p.num_legs() + q.num_legs());
  for (std::size_t i = 0; i < pk; ++i) labels.push_back(p.label(i));
  for (std::size_t i = 0; i < qk; ++i) labels.push_back(q.label(i) + shift);
  for (std::size_t i = 0; i < pl; ++i) labels.push_back(p.label(pk + i));
  for (std::size_t i = 0; i < ql; ++i) labels.push_back(q.label(qk + i) + shift);
  return Partition::from_labels(concat(p.upper_colors(), q.upper_colors()),
                                concat(p.lower_colors(), q.lower_colors()), labels);
}

Composite compose(Partition const& top, Partition const& bottom) {
  if (top.lower_colors() != bottom.upper_colors()) {
    throw ShapeMismatch("compose: the lower word of the top diagram (" +
                        format_color_word(top.lower_colors()) +
                        ") differs from the upper word of the bottom diagram (" +
                        format_color_word(bottom.upper_colors()) + ")");
  }
  std::size_t const k = top.num_upper(), l = top.num_lower(), m = bottom.num_lower();
  // nodes: top upper [0,k), middle [k,k+l), bottom lower [k+l,k+l+m)
  detail::UnionFind uf(k + l + m);
  std::vector<int> first(top.num_blocks(), -1);
  for (std::size_t leg = 0; leg < k + l; ++leg) {
    auto& f = first[top.label(leg)];
    if (f < 0) f = static_cast<int>(leg); else uf.unite(static_cast<std::size_t>(f), leg);
  }
  first.assign(bottom.num_blocks(), -1);
  for (std::size_t leg = 0; leg < l + m; ++leg) {
    std::size_t const node = k + leg;
    auto& f = first[bottom.label(leg)];
    if (f < 0) f = static_cast<int>(node); else uf.unite(static_cast<std::size_t>(f), node);
  }

  std::vector<int> labels;
  labels.reserve(k + m);
  std::vector<char> outer_root(k + l + m, 0);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(static_cast<int>(uf.find(i)));
    outer_root[uf.find(i)] = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(static_cast<int>(uf.find(k + l + i)));
    outer_root[uf.find(k + l + i)] = 1;
  }
  std::size_t loops = 0;
  for (std::size_t node = k; node < k + l; ++node) {
    if (uf.find(node) == node && !outer_root[node]) ++loops;
  }
  return {Partition::from_labels(top.upper_colors(), bottom.lower_colors(), labels), loops};
}

Partition adjoint(Partition const& p) {
  std::size_t const k = p.num_upper(), l = p.num_lower();
  std::vector<int> labels;
  labels.reserve(k + l);
  for (std::size_t i = 0; i < l; ++i) labels.push_back(p.label(k + i));
  for (std::size_t i = 0; i < k; ++i) labels.push_back(p.label(i));
  return Partition::from_labels(inverted(p.lower_colors()), inverted(p.upper_colors()), labels);
}

Partition identity(ColorWord const& word) {
  std::vector<int> labels;
  labels.reserve(2 * word.size());
  for (int twice = 0; twice < 2; ++twice)
    for (std::size_t i = 0; i < word.size(); ++i) labels.push_back(static_cast<int>(i));
  return Partition::from_labels(word, word, labels);
}

Partition semicircle(Color left, Color right) {
  std::array<int, 2> labels{0, 0};
  return Partition::from_labels({}, {left, right}, labels);
}

Partition crossing(Color a, Color b) {
  std::array<int, 4> labels{0, 1, 1, 0};
  return Partition::from_labels({a, b}, {b, a}, labels);
}

Partition half_classical_crossing(Color a, Color b, Color c) {
  std::array<int, 6> labels{0, 1, 2, 2, 1, 0};
  return Partition::from_labels({a, b, c}, {c, b, a}, labels);
}

bool member(CategorySpec const& cat, Partition const& p) {
  if (cat.is_named()) return named_member(cat, p);
  return cat.closure()->contains(p);
}

std::vector<Partition> category_set(CategorySpec const& cat, ColorWord const& upper,
                                    ColorWord const& lower) {
  if (!cat.is_named()) return cat.closure()->members(upper, lower);
  std::vector<Partition> out;
  for_each_partition(upper, lower, enumeration_filter(cat.id()), [&](Partition const& p) {
    if (named_member(cat, p)) out.push_back(p);
  });
  return out;
}

std::vector<ColorWord> color_words(std::size_t length, Regime regime) {
  if (regime == Regime::uncolored) return {white_word(length)};
  std::vector<ColorWord> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
    ColorWord w(length);
    for (std::size_t i = 0; i < length; ++i)
      w[i] = (mask >> (length - 1 - i)) & 1 ? Color::black : Color::white;
    out.push_back(std::move(w));
  }
  return out;
}

bool GeneratedCategory::contains(Partition const& p) const {
  if (p.num_legs() > leg_bound_) {
    throw BoundExceeded("partition has more legs than the closure bound");
  }
  Partition const key = regime_ == Regime::uncolored ? whitened(p) : p;
  auto it = by_shape_.find({key.upper_colors(), key.lower_colors()});
  if (it == by_shape_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), key);
}

std::vector<Partition> const& GeneratedCategory::members(ColorWord const& upper,
                                                         ColorWord const& lower) const {
  static std::vector<Partition> const empty;
  if (upper.size() + lower.size() > leg_bound_) {
    throw BoundExceeded("shape has more legs than the closure bound");
  }
  Shape key{upper, lower};
  if (regime_ == Regime::uncolored) key = {white_word(upper.size()), white_word(lower.size())};
  auto it = by_shape_.find(key);
  return it == by_shape_.end() ? empty : it->second;
}

std::vector<Partition> GeneratedCategory::all_members() const {
  std::vector<Partition> out;
  for (auto const& [shape, list] : by_shape_) out.insert(out.end(), list.begin(), list.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GeneratedCategory::size() const noexcept {
  std::size_t n = 0;
  for (auto const& [shape, list] : by_shape_) n += list.size();
  return n;
}

namespace {

struct ColorWordHash {
  std::size_t operator()(ColorWord const& w) const noexcept {
    std::size_t h = w.size() * 0x9e3779b97f4a7c15ULL;
    for (Color c : w) h = h * 3 + static_cast<std::size_t>(c) + 1;
    return h;
  }
};

// Semi-naive fixed point: each newly found diagram is combined with every
// diagram known at that time, and with the diagrams found after it.
class ClosureBuilder {
 public:
  ClosureBuilder(std::size_t bound, Regime regime) : bound_(bound), regime_(regime) {}

  void add(Partition p) {
    if (p.num_legs() > bound_) return;
    if (regime_ == Regime::uncolored) p = whitened(p);
    if (!known_.insert(p).second) return;
    std::size_t const index = list_.size();
    by_upper_[p.upper_colors()].push_back(index);
    by_lower_[p.lower_colors()].push_back(index);
    if (by_legs_.size() <= p.num_legs()) by_legs_.resize(p.num_legs() + 1);
    by_legs_[p.num_legs()].push_back(index);
    list_.push_back(std::move(p));
  }

  void run() {
    std::size_t done = 0;
    while (done < list_.size()) {
      std::size_t const end = list_.size();
      for (std::size_t xi = done; xi < end; ++xi) expand(xi);
      done = end;
    }
  }

  std::vector<Partition> const& list() const { return list_; }

 private:
  void expand(std::size_t xi) {
    add(adjoint(list_[xi]));
    std::size_t const legs = list_[xi].num_legs();
    for (std::size_t n = 0; n + legs <= bound_ && n < by_legs_.size(); ++n) {
      for (std::size_t k = 0; k < by_legs_[n].size(); ++k) {
        std::size_t const yi = by_legs_[n][k];
        add(tensor(list_[xi], list_[yi]));
        add(tensor(list_[yi], list_[xi]));
      }
    }
    if (auto it = by_upper_.find(list_[xi].lower_colors()); it != by_upper_.end()) {
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        add(compose(list_[xi], list_[it->second[k]]).result);
      }
    }
    if (auto it = by_lower_.find(list_[xi].upper_colors()); it != by_lower_.end()) {
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        add(compose(list_[it->second[k]], list_[xi]).result);
      }
    }
  }

  std::size_t bound_;
  Regime regime_;
  std::vector<Partition> list_;
  std::unordered_set<Partition> known_;
  std::unordered_map<ColorWord, std::vector<std::size_t>, ColorWordHash> by_upper_;
  std::unordered_map<ColorWord, std::vector<std::size_t>, ColorWordHash> by_lower_;
  std::vector<std::vector<std::size_t>> by_legs_;
};

}  // namespace

std::shared_ptr<GeneratedCategory const> closure(std::vector<Partition> const& generators,
                                                 std::size_t leg_bound, Regime regime,
                                                 std::optional<std::size_t> working_bound) {
  if (leg_bound > max_closure_bound) {
    throw BoundExceeded("closure bound " + std::to_string(leg_bound) + " exceeds " +
                        std::to_string(max_closure_bound));
  }
  std::size_t const work = std::max(leg_bound, working_bound.value_or(leg_bound + 2));
  for (auto const& g : generators) {
    if (g.num_legs() > work) throw BoundExceeded("generator has more legs than the working bound");
  }

  ClosureBuilder builder(work, regime);
  builder.add(Partition{});
  if (regime == Regime::uncolored) {
    builder.add(identity({Color::white}));
    builder.add(semicircle(Color::white, Color::white));
  } else {
    builder.add(identity({Color::white}));
    builder.add(identity({Color::black}));
    builder.add(semicircle(Color::white, Color::black));
    builder.add(semicircle(Color::black, Color::white));
  }
  for (auto const& g : generators) builder.add(g);
  builder.run();

  auto out = std::make_shared<GeneratedCategory>();
  out->leg_bound_ = leg_bound;
  out->working_bound_ = work;
  out->regime_ = regime;
  out->generators_ = generators;
  for (auto const& p : builder.list()) {
    if (p.num_legs() > leg_bound) continue;
    out->by_shape_[{p.upper_colors(), p.lower_colors()}].push_back(p);
  }
  for (auto& [shape, list] : out->by_shape_) std::sort(list.begin(), list.end());
  return out;
}

AxiomReport verify_axioms(CategorySpec const& cat, std::size_t leg_bound, Regime regime) {
  AxiomReport report;
  auto normalize = [&](Partition const& p) { return regime == Regime::uncolored ? whitened(p) : p; };
  auto require = [&](Partition const& p, auto const& what) {
    ++report.checked_operations;
    if (!member(cat, p)) report.defects.push_back(std::string(what()) + " is missing: " + p.to_string());
  };
  auto label = [](char const* text) { return [text] { return std::string(text); }; };

  for (auto const& w : color_words(1, regime)) require(identity(w), label("identity"));
  if (regime == Regime::uncolored) {
    require(semicircle(Color::white, Color::white), label("semicircle"));
  } else {
    require(semicircle(Color::white, Color::black), label("semicircle"));
    require(semicircle(Color::black, Color::white), label("semicircle"));
  }

  std::vector<Partition> members;
  for (std::size_t n = 0; n <= leg_bound; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (auto const& up : color_words(k, regime)) {
        for (auto const& down : color_words(n - k, regime)) {
          auto set = category_set(cat, up, down);
          members.insert(members.end(), set.begin(), set.end());
        }
      }
    }
  }
  report.checked_elements = members.size();

  std::map<ColorWord, std::vector<std::size_t>> by_upper;
  for (std::size_t i = 0; i < members.size(); ++i) by_upper[members[i].upper_colors()].push_back(i);

  for (auto const& x : members) {
    require(normalize(adjoint(x)), [&] { return "adjoint of " + x.to_string(); });
    for (auto const& y : members) {
      if (x.num_legs() + y.num_legs() <= leg_bound) {
        require(tensor(x, y), [&] { return "tensor of " + x.to_string() + " and " + y.to_string(); });
      }
    }
    auto it = by_upper.find(x.lower_colors());
    if (it == by_upper.end()) continue;
    for (std::size_t yi : it->second) {
      auto const& y = members[yi];
      if (x.num_upper() + y.num_lower() > leg_bound) continue;
      require(compose(x, y).result,
              [&] { return "composition of " + x.to_string() + " over " + y.to_string(); });
    }
  }
  return report;
}

}  // namespace easyq
