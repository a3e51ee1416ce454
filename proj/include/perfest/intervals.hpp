#pragma once

#include "perfest/distribution.hpp"
#include "perfest/rational.hpp"

namespace perfest {

struct HdiInterval {
  double lower = 0.0;
  double upper = 0.0;
  double alpha = 0.0;
  double covered_mass = 0.0;
  // Exact support points at the bounds.
  Rational lower_value;
  Rational upper_value;

  bool contains(const Rational& v) const { return lower_value <= v && v <= upper_value; }
};

/// Highest-density interval holding at least 1 - alpha of the mass.
///
/// Two pointers start at the ends of the sorted support. Each step looks at
/// the lighter endpoint (the upper one on ties) and drops it if the dropped
/// tail mass stays below alpha; the first endpoint that cannot be dropped
/// ends the search. The result is the shortest contiguous interval for
/// unimodal distributions. For multimodal ones it is a valid (1 - alpha)
/// interval but not necessarily the shortest.
HdiInterval hdi(const DiscreteDistribution& d, double alpha);

}  // namespace perfest
