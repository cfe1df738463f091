#pragma once

#include "easyq/high_precision.hpp"
#include "easyq/rational.hpp"

namespace easyq {

struct FreeHypersphericalSpec {
  long n = 3;
  long l = 0;
};

/// Root of q + 1/q = -N in (-1, 0). Requires N >= 3.
HighPrecision free_q(long n);

/// Closed formula for the 2l-th moment of a coordinate on the free real sphere.
HighPrecision free_hyperspherical_formula(FreeHypersphericalSpec const& spec);

/// Best rational approximation with denominator at most `max_denominator`,
/// from the continued fraction expansion.
Rational reconstruct_rational(HighPrecision const& x, Integer const& max_denominator);

struct FreeHypersphericalReport {
  HighPrecision formula;
  /// |formula at 100 digits - formula at 50 digits|, an estimate of the rounding error.
  HighPrecision rounding_estimate;
  Rational reconstructed;
  Rational exact;
  HighPrecision difference;
  bool agrees = false;
};

/// Evaluates the closed formula and compares it with the exact Weingarten value
/// of the integral of u_11^{2l} over the free orthogonal group.
FreeHypersphericalReport free_hyperspherical_moment(FreeHypersphericalSpec const& spec,
                                                    HighPrecision const& tolerance = HighPrecision("1e-30"));

}  // namespace easyq
