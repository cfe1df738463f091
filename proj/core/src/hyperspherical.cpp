#include "easyq/hyperspherical.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "easyq/weingarten.hpp"

namespace easyq {

namespace {

template <class Real>
Real q_root(long n) {
  if (n < 3) throw std::domain_error("the closed formula needs N >= 3 (q = -1 at N = 2)");
  Real const nn = n;
  return (-nn + boost::multiprecision::sqrt(nn * nn - 4)) / 2;
}

template <class Real>
Real formula(long n, long l) {
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  Real const q = q_root<Real>(n);
  Real sum = 0;
  for (long r = -l - 1; r <= l + 1; ++r) {
    Integer const c = binomial(static_cast<unsigned long>(2 * l + 2), static_cast<unsigned long>(l + r + 1));
    Real term = Real(c.get_str()) * r / (1 + boost::multiprecision::pow(q, r));
    if (r % 2 != 0) term = -term;
    sum += term;
  }
  Real const prefactor = (q + 1) / (q - 1) / (l + 1) / boost::multiprecision::pow(Real(n + 2), l);
  return prefactor * sum;
}

HighPrecision to_high(Rational const& x) {
  return HighPrecision(x.get_num().get_str()) / HighPrecision(x.get_den().get_str());
}

}  // namespace

HighPrecision free_q(long n) { return q_root<HighPrecision>(n); }

HighPrecision free_hyperspherical_formula(FreeHypersphericalSpec const& spec) {
  return formula<HighPrecision>(spec.n, spec.l);
}

Rational reconstruct_rational(HighPrecision const& x, Integer const& max_denominator) {
  // convergents h/k of the continued fraction of x
  Integer h_prev = 1, h = 0, k_prev = 0, k = 1;
  HighPrecision rest = x;
  Rational best = 0;
  for (int step = 0; step < 200; ++step) {
    HighPrecision const whole = boost::multiprecision::floor(rest);
    Integer const a(whole.convert_to<boost::multiprecision::cpp_int>().str());
    Integer const h_next = a * h_prev + h;
    Integer const k_next = a * k_prev + k;
    if (k_next > max_denominator) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    best = Rational(h_prev, k_prev);
    best.canonicalize();
    HighPrecision const frac = rest - whole;
    if (frac < HighPrecision("1e-90")) break;
    rest = 1 / frac;
  }
  return best;
}

FreeHypersphericalReport free_hyperspherical_moment(FreeHypersphericalSpec const& spec,
                                                    HighPrecision const& tolerance) {
  FreeHypersphericalReport report;
  report.formula = formula<HighPrecision>(spec.n, spec.l);
  using Low = boost::multiprecision::cpp_bin_float_50;
  HighPrecision const low(formula<Low>(spec.n, spec.l).str(0, std::ios_base::scientific));
  report.rounding_estimate = boost::multiprecision::abs(report.formula - low);
  report.reconstructed = reconstruct_rational(report.formula, Integer("1000000000000000"));

  MonomialSpec m;
  for (long i = 0; i < 2 * spec.l; ++i) m.factors.push_back({1, 1, Color::white});
  report.exact = haar_moment({GroupId::O_plus, false}, m, spec.n);
  report.difference = boost::multiprecision::abs(report.formula - to_high(report.exact));
  report.agrees = report.difference <= tolerance;
  return report;
}

}  // namespace easyq
