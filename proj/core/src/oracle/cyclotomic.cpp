#include "easyq/oracle/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace easyq::oracle {

Cyclotomic::Cyclotomic(unsigned s, Rational a, Rational b) : s_(s), a_(std::move(a)), b_(std::move(b)) {
  if (s < 1 || s > 4) throw std::invalid_argument("exact cyclotomic arithmetic needs 1 <= s <= 4");
  if (s <= 2 && b_ != 0) throw std::invalid_argument("Q(z) is Q itself for s <= 2");
}

Cyclotomic Cyclotomic::root_power(unsigned s, long e) {
  long const r = ((e % static_cast<long>(s)) + static_cast<long>(s)) % static_cast<long>(s);
  switch (s) {
    case 1:
      return Cyclotomic(1, 1);
    case 2:
      return Cyclotomic(2, r == 0 ? 1 : -1);
    case 3:
      // z^2 = -1 - z
      if (r == 0) return Cyclotomic(3, 1);
      if (r == 1) return Cyclotomic(3, 0, 1);
      return Cyclotomic(3, -1, -1);
    case 4:
      // z^2 = -1
      if (r == 0) return Cyclotomic(4, 1);
      if (r == 1) return Cyclotomic(4, 0, 1);
      if (r == 2) return Cyclotomic(4, -1);
      return Cyclotomic(4, 0, -1);
    default:
      throw std::invalid_argument("exact cyclotomic arithmetic needs 1 <= s <= 4");
  }
}

void Cyclotomic::require_same(Cyclotomic const& other) const {
  if (s_ != other.s_) throw std::invalid_argument("cyclotomic fields differ");
}

Cyclotomic Cyclotomic::conj() const {
  // conj(z) = z^{-1}: z^2 for s = 3, -z for s = 4
  switch (s_) {
    case 3:
      return Cyclotomic(3, a_ - b_, -b_);
    case 4:
      return Cyclotomic(4, a_, -b_);
    default:
      return *this;
  }
}

std::complex<double> Cyclotomic::to_complex() const {
  double const angle = 2 * std::numbers::pi / s_;
  std::complex<double> const z = s_ <= 2 ? std::complex<double>(1, 0) : std::polar(1.0, angle);
  return to_double(a_) + to_double(b_) * z;
}

std::string Cyclotomic::to_string() const {
  if (b_ == 0) return easyq::to_string(a_);
  return easyq::to_string(a_) + " + " + easyq::to_string(b_) + "*z" + std::to_string(s_);
}

Cyclotomic& Cyclotomic::operator+=(Cyclotomic const& other) {
  require_same(other);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(Cyclotomic const& other) {
  require_same(other);
  Rational const aa = a_ * other.a_;
  Rational const ab = a_ * other.b_ + b_ * other.a_;
  Rational const bb = b_ * other.b_;
  switch (s_) {
    case 3:
      a_ = aa - bb;
      b_ = ab - bb;
      break;
    case 4:
      a_ = aa - bb;
      b_ = ab;
      break;
    default:
      a_ = aa;
      b_ = 0;
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(Rational const& scalar) {
  a_ /= scalar;
  b_ /= scalar;
  return *this;
}

}  // namespace easyq::oracle
