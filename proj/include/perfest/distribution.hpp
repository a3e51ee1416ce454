#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "perfest/rational.hpp"

namespace perfest {

/// Tolerance on the total mass of every distribution.
inline constexpr double kMassTolerance = 1e-9;

/// Finite probability mass function over exact rational support points.
///
/// Entries are kept sorted by value with unique keys. Zero-probability
/// entries are dropped on construction, so `probability(v)` returns 0 for
/// any value not in `entries()`. A default-constructed distribution is
/// empty and is not a valid PMF; every factory returns a valid one.
class DiscreteDistribution {
 public:
  using Entry = std::pair<Rational, double>;

  DiscreteDistribution() = default;

  static DiscreteDistribution point_mass(Rational value);

  /// Sorts, merges duplicate keys and validates. Throws DomainError on
  /// negative probabilities or a total mass off by more than kMassTolerance.
  static DiscreteDistribution from_entries(std::vector<Entry> entries);

  /// PMF over the integers 0..pmf.size()-1.
  static DiscreteDistribution from_counts(std::span<const double> pmf);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double probability(const Rational& value) const;
  double total_mass() const;

  /// Distribution of X / divisor.
  DiscreteDistribution divided_by(std::int64_t divisor) const;

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  std::vector<Entry> entries_;
};

/// PMF of a sum of independent Bernoulli(p_i) by iterative convolution. O(n^2).
DiscreteDistribution poisson_binomial_dp(std::span<const double> probabilities);

/// Same PMF via the discrete Fourier transform of the characteristic function.
///
/// The characteristic function is evaluated at the n+1 roots of unity
/// (half of them, by conjugate symmetry) and inverted with a direct DFT, so
/// the cost is O(n^2) like the convolution; the value of this route is that
/// it is algebraically independent of it. Negative roundoff is clamped to 0
/// and the result renormalized; a renormalization larger than 1e-8 throws
/// NumericalError.
DiscreteDistribution poisson_binomial_cf(std::span<const double> probabilities);

enum class PmfMethod { convolution, fourier };

DiscreteDistribution poisson_binomial(std::span<const double> probabilities,
                                      PmfMethod method = PmfMethod::convolution);

double expectation(const DiscreteDistribution& d);
double variance(const DiscreteDistribution& d);

/// Distribution of m - X for an integer-valued X supported on 0..m.
DiscreteDistribution complement_count(const DiscreteDistribution& d, std::int64_t m);

/// Total-variation distance: half the L1 distance between the PMFs.
double total_variation(const DiscreteDistribution& a, const DiscreteDistribution& b);

}  // namespace perfest
