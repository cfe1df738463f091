#include "easyq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace easyq {

std::string to_string(Rational const& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto const dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t const scale = s.size() - dot - 1;
    Integer numerator;
    if (numerator.set_str(digits, 10) != 0) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    Integer denominator = power(Integer(10), scale);
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
  }

  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rational power(Rational const& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return power(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer power(Integer const& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

double to_double(Rational const& value) { return value.get_d(); }

}  // namespace easyq
