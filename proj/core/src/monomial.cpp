#include "easyq/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace easyq {

ColorWord MonomialSpec::word() const {
  ColorWord w;
  w.reserve(factors.size());
  for (auto const& f : factors) w.push_back(f.color);
  return w;
}

std::vector<int> MonomialSpec::rows() const {
  std::vector<int> out;
  for (auto const& f : factors) out.push_back(f.i);
  return out;
}

std::vector<int> MonomialSpec::cols() const {
  std::vector<int> out;
  for (auto const& f : factors) out.push_back(f.j);
  return out;
}

int MonomialSpec::max_index() const {
  int m = 0;
  for (auto const& f : factors) m = std::max({m, f.i, f.j});
  return m;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int positive() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || value < 1) fail("expected a positive index");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError("monomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialSpec parse_monomial(std::string_view text) {
  MonomialSpec m;
  Cursor cur(text);
  if (cur.done()) return m;
  if (cur.accept('1')) {
    if (!cur.done()) cur.fail("unexpected text after the empty product");
    return m;
  }
  while (!cur.done()) {
    cur.expect('u');
    Factor f;
    if (cur.accept('*')) f.color = Color::black;
    cur.expect('[');
    f.i = cur.positive();
    cur.expect(',');
    f.j = cur.positive();
    cur.expect(']');
    int repeat = 1;
    if (cur.accept('^')) repeat = cur.positive();
    if (m.factors.size() + static_cast<std::size_t>(repeat) > max_legs) cur.fail("monomial is too long");
    m.factors.insert(m.factors.end(), static_cast<std::size_t>(repeat), f);
    cur.accept('*');
  }
  return m;
}

std::string format_monomial(MonomialSpec const& m) {
  if (m.factors.empty()) return "1";
  std::string out;
  for (auto const& f : m.factors) {
    if (!out.empty()) out += ' ';
    out += f.color == Color::white ? "u[" : "u*[";
    out += std::to_string(f.i) + "," + std::to_string(f.j) + "]";
  }
  return out;
}

std::vector<int> parse_index_list(std::string_view text) {
  std::vector<int> out;
  Cursor cur(text);
  while (!cur.done()) {
    out.push_back(cur.positive());
    cur.accept(',');
  }
  return out;
}

}  // namespace easyq
