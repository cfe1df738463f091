#include "easyq/temperley_lieb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "easyq/category.hpp"
#include "union_find.hpp"

namespace easyq {

namespace {

Partition whitened(Partition const& p) {
  return p.recolored(white_word(p.num_upper()), white_word(p.num_lower()));
}

void require_tl_diagram(Partition const& d, std::size_t k) {
  if (d.num_upper() != k || d.num_lower() != k || !is_pairing(d) || !is_noncrossing(d)) {
    throw std::invalid_argument("not a noncrossing pairing of " + std::to_string(k) + "+" +
                                std::to_string(k) + " points: " + d.to_string());
  }
}

// Noncrossing pairings of k+k points, from balanced bracket words read clockwise.
void for_each_tl_diagram(std::size_t k, std::vector<Partition>& out) {
  std::size_t const n = 2 * k;
  std::vector<int> by_position(n, 0);
  std::vector<std::size_t> open;
  auto leg_of = [&](std::size_t position) { return position < k ? position : k + (n - 1 - position); };
  auto rec = [&](auto&& self, std::size_t position, std::size_t opened) -> void {
    if (position == n) {
      std::vector<int> labels(n);
      for (std::size_t p = 0; p < n; ++p) labels[leg_of(p)] = by_position[p];
      out.push_back(Partition::from_labels(white_word(k), white_word(k), labels));
      return;
    }
    if (opened < k) {
      by_position[position] = static_cast<int>(opened);
      open.push_back(opened);
      self(self, position + 1, opened + 1);
      open.pop_back();
    }
    if (!open.empty()) {
      std::size_t const block = open.back();
      by_position[position] = static_cast<int>(block);
      open.pop_back();
      self(self, position + 1, opened);
      open.push_back(block);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

TLElement::TLElement(std::size_t k, Rational delta) : k_(k), delta_(std::move(delta)) {
  if (delta_ <= 0) throw std::invalid_argument("loop parameter must be positive");
  if (k_ > max_tl_strands) throw BoundExceeded("too many strands for the diagram algebra");
}

TLElement TLElement::identity(std::size_t k, Rational delta) {
  TLElement x(k, std::move(delta));
  x.add(easyq::identity(white_word(k)), 1);
  return x;
}

TLElement TLElement::diagram(Partition const& d, Rational delta) {
  TLElement x(d.num_upper(), std::move(delta));
  x.add(d, 1);
  return x;
}

void TLElement::add(Partition const& d, Rational const& coefficient) {
  Partition const key = whitened(d);
  require_tl_diagram(key, k_);
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void TLElement::require_compatible(TLElement const& other) const {
  if (k_ != other.k_ || delta_ != other.delta_) {
    throw std::invalid_argument("diagram algebra elements differ in strands or loop parameter");
  }
}

TLElement& TLElement::operator+=(TLElement const& other) {
  require_compatible(other);
  for (auto const& [d, c] : other.terms_) add(d, c);
  return *this;
}

TLElement& TLElement::operator-=(TLElement const& other) {
  require_compatible(other);
  for (auto const& [d, c] : other.terms_) add(d, -c);
  return *this;
}

TLElement& TLElement::operator*=(Rational const& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= scalar;
  return *this;
}

TLElement operator*(TLElement const& a, TLElement const& b) {
  a.require_compatible(b);
  TLElement out(a.k_, a.delta_);
  for (auto const& [da, ca] : a.terms_) {
    for (auto const& [db, cb] : b.terms_) {
      auto const [d, loops] = compose(db, da);
      out.add(d, ca * cb * power(a.delta_, static_cast<long>(loops)));
    }
  }
  return out;
}

TLElement tl_multiply(TLElement const& a, TLElement const& b) { return a * b; }

TLElement cup_cap(std::size_t i, std::size_t k, Rational const& delta) {
  if (i < 1 || i >= k) throw std::out_of_range("generator index must lie in 1..k-1");
  std::vector<int> labels(2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    labels[j] = static_cast<int>(j);
    labels[k + j] = static_cast<int>(j);
  }
  labels[k + i - 1] = static_cast<int>(k);
  labels[k + i] = static_cast<int>(k);
  labels[i] = static_cast<int>(i - 1);
  return TLElement::diagram(Partition::from_labels(white_word(k), white_word(k), labels), delta);
}

TLElement jones_generator(std::size_t i, std::size_t k, Rational const& delta) {
  return cup_cap(i, k, delta) * (1 / delta);
}

TLElement tl_adjoint(TLElement const& x) {
  TLElement out(x.strands(), x.delta());
  for (auto const& [d, c] : x.terms()) out.add(adjoint(d), c);
  return out;
}

Rational markov_trace(TLElement const& x) {
  std::size_t const k = x.strands();
  Rational sum = 0;
  for (auto const& [d, c] : x.terms()) {
    detail::UnionFind uf(2 * k);
    std::vector<int> first(d.num_blocks(), -1);
    for (std::size_t leg = 0; leg < 2 * k; ++leg) {
      int& f = first[d.label(leg)];
      if (f < 0) f = static_cast<int>(leg); else uf.unite(static_cast<std::size_t>(f), leg);
    }
    for (std::size_t j = 0; j < k; ++j) uf.unite(j, k + j);
    long loops = 0;
    for (std::size_t leg = 0; leg < 2 * k; ++leg) loops += uf.find(leg) == leg;
    sum += c * power(x.delta(), loops - static_cast<long>(k));
  }
  return sum;
}

TLElement tl_embed(TLElement const& x) {
  TLElement out(x.strands() + 1, x.delta());
  Partition const strand = identity({Color::white});
  for (auto const& [d, c] : x.terms()) out.add(tensor(d, strand), c);
  return out;
}

std::size_t tl_dimension(std::size_t k) {
  if (k > max_tl_strands) throw BoundExceeded("too many strands for the diagram algebra");
  std::vector<Partition> diagrams;
  for_each_tl_diagram(k, diagrams);
  return diagrams.size();
}

std::vector<Partition> tl_basis(std::size_t k) {
  if (k > max_tl_strands) throw BoundExceeded("too many strands for the diagram algebra");
  std::vector<Partition> diagrams;
  for_each_tl_diagram(k, diagrams);
  std::sort(diagrams.begin(), diagrams.end());
  return diagrams;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t k, Rational delta)
      : text_(text), k_(k), delta_(std::move(delta)) {}

  TLElement parse() {
    TLElement x = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return x;
  }

 private:
  TLElement expression() {
    TLElement x = term();
    while (true) {
      if (accept('+')) x += term();
      else if (accept('-')) x -= term();
      else return x;
    }
  }

  TLElement term() {
    TLElement x = unary();
    while (accept('*')) x = x * unary();
    return x;
  }

  TLElement unary() {
    if (accept('-')) return unary() * Rational(-1);
    return atom();
  }

  TLElement atom() {
    skip();
    if (accept('(')) {
      TLElement x = expression();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      bool const rescaled = text_[pos_] == 'e';
      ++pos_;
      std::size_t const i = number();
      if (i < 1 || i >= k_) fail("generator index out of range");
      return rescaled ? jones_generator(i, k_, delta_) : cup_cap(i, k_, delta_);
    }
    if (text_.substr(pos_, 2) == "id") {
      pos_ += 2;
      return TLElement::identity(k_, delta_);
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t const start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' || text_[pos_] == '.'))
        ++pos_;
      return TLElement::identity(k_, delta_) * parse_rational(text_.substr(start, pos_ - start));
    }
    fail("expected a term");
  }

  std::size_t number() {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError("expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t k_;
  Rational delta_;
};

}  // namespace

TLElement parse_tl_expression(std::string_view text, std::size_t k, Rational const& delta) {
  return ExpressionParser(text, k, delta).parse();
}

}  // namespace easyq
