#pragma once

#include <complex>
#include <string>

#include "easyq/rational.hpp"

namespace easyq::oracle {

/// Element a + b z of Q(z) for z a primitive s-th root of unity, s <= 4. For
/// s <= 2 the field is Q and b stays 0.
class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned s, Rational a = 0, Rational b = 0);

  /// z^e for any integer e.
  static Cyclotomic root_power(unsigned s, long e);

  unsigned order() const noexcept { return s_; }
  Rational const& a() const noexcept { return a_; }
  Rational const& b() const noexcept { return b_; }

  bool is_rational() const noexcept { return b_ == 0; }
  Cyclotomic conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(Cyclotomic const& other);
  Cyclotomic& operator*=(Cyclotomic const& other);
  Cyclotomic& operator/=(Rational const& scalar);

  friend Cyclotomic operator+(Cyclotomic x, Cyclotomic const& y) { return x += y; }
  friend Cyclotomic operator*(Cyclotomic x, Cyclotomic const& y) { return x *= y; }
  friend bool operator==(Cyclotomic const&, Cyclotomic const&) = default;

 private:
  void require_same(Cyclotomic const& other) const;

  unsigned s_;
  Rational a_;
  Rational b_;
};

}  // namespace easyq::oracle
