#include "perfest/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "perfest/errors.hpp"

namespace perfest {

namespace {

void check_probabilities(std::span<const double> probabilities) {
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("poisson_binomial: parameter " + std::to_string(i) + " = " +
                        std::to_string(p) + " is outside [0, 1]");
    }
  }
}

}  // namespace

DiscreteDistribution DiscreteDistribution::point_mass(Rational value) {
  DiscreteDistribution d;
  d.entries_.emplace_back(value, 1.0);
  return d;
}

DiscreteDistribution DiscreteDistribution::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });

  DiscreteDistribution d;
  d.entries_.reserve(entries.size());
  double total = 0.0;
  for (const auto& [value, p] : entries) {
    if (!(p >= 0.0)) throw DomainError("distribution: negative or NaN probability at " + value.to_string());
    total += p;
    if (!d.entries_.empty() && d.entries_.back().first == value) {
      d.entries_.back().second += p;
    } else {
      d.entries_.emplace_back(value, p);
    }
  }
  std::erase_if(d.entries_, [](const Entry& e) { return e.second == 0.0; });

  if (std::abs(total - 1.0) > kMassTolerance) {
    throw DomainError("distribution: total mass " + std::to_string(total) + " differs from 1");
  }
  return d;
}

DiscreteDistribution DiscreteDistribution::from_counts(std::span<const double> pmf) {
  std::vector<Entry> entries;
  entries.reserve(pmf.size());
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    entries.emplace_back(Rational(static_cast<std::int64_t>(k)), pmf[k]);
  }
  return from_entries(std::move(entries));
}

double DiscreteDistribution::probability(const Rational& value) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const Entry& e, const Rational& v) { return e.first < v; });
  return (it != entries_.end() && it->first == value) ? it->second : 0.0;
}

double DiscreteDistribution::total_mass() const {
  double total = 0.0;
  for (const auto& e : entries_) total += e.second;
  return total;
}

DiscreteDistribution DiscreteDistribution::divided_by(std::int64_t divisor) const {
  if (divisor <= 0) throw DomainError("distribution: divisor must be positive");
  // Division by a positive constant preserves order and distinctness.
  DiscreteDistribution d;
  d.entries_.reserve(entries_.size());
  for (const auto& [value, p] : entries_) {
    d.entries_.emplace_back(Rational(value.num(), value.den() * divisor), p);
  }
  return d;
}

DiscreteDistribution poisson_binomial_dp(std::span<const double> probabilities) {
  check_probabilities(probabilities);
  std::vector<double> pmf(probabilities.size() + 1, 0.0);
  pmf[0] = 1.0;
  std::size_t filled = 0;
  for (double p : probabilities) {
    ++filled;
    for (std::size_t k = filled; k > 0; --k) {
      pmf[k] = pmf[k] * (1.0 - p) + pmf[k - 1] * p;
    }
    pmf[0] *= (1.0 - p);
  }
  return DiscreteDistribution::from_counts(pmf);
}

DiscreteDistribution poisson_binomial_cf(std::span<const double> probabilities) {
  check_probabilities(probabilities);
  const std::size_t n = probabilities.size();
  const std::size_t points = n + 1;
  const double omega = 2.0 * std::numbers::pi / static_cast<double>(points);

  // twiddle[m] = exp(-i * omega * m)
  std::vector<std::complex<double>> twiddle(points);
  for (std::size_t m = 0; m < points; ++m) {
    twiddle[m] = std::polar(1.0, -omega * static_cast<double>(m));
  }

  // chi[l] = prod_j (1 - p_j + p_j * exp(i * omega * l)); chi[points - l] = conj(chi[l]).
  std::vector<std::complex<double>> chi(points);
  chi[0] = 1.0;
  for (std::size_t l = 1; l <= points / 2; ++l) {
    const std::complex<double> z = std::conj(twiddle[l]);
    std::complex<double> prod = 1.0;
    for (double p : probabilities) prod *= (1.0 - p) + p * z;
    chi[l] = prod;
    chi[points - l] = std::conj(prod);
  }

  std::vector<double> pmf(points);
  for (std::size_t k = 0; k < points; ++k) {
    std::complex<double> acc = 0.0;
    std::size_t idx = 0;  // (l * k) mod points
    for (std::size_t l = 0; l < points; ++l) {
      acc += chi[l] * twiddle[idx];
      idx += k;
      if (idx >= points) idx -= points;
    }
    pmf[k] = std::max(0.0, acc.real() / static_cast<double>(points));
  }

  double total = 0.0;
  for (double p : pmf) total += p;
  if (std::abs(total - 1.0) > 1e-8) {
    throw NumericalError("poisson_binomial_cf: renormalization by " + std::to_string(total) +
                         " exceeds tolerance");
  }
  for (double& p : pmf) p /= total;
  return DiscreteDistribution::from_counts(pmf);
}

DiscreteDistribution poisson_binomial(std::span<const double> probabilities, PmfMethod method) {
  return method == PmfMethod::fourier ? poisson_binomial_cf(probabilities)
                                      : poisson_binomial_dp(probabilities);
}

double expectation(const DiscreteDistribution& d) {
  double mean = 0.0;
  for (const auto& [value, p] : d.entries()) mean += value.to_double() * p;
  return mean;
}

double variance(const DiscreteDistribution& d) {
  const double mean = expectation(d);
  double var = 0.0;
  for (const auto& [value, p] : d.entries()) {
    const double dev = value.to_double() - mean;
    var += dev * dev * p;
  }
  return std::max(0.0, var);
}

DiscreteDistribution complement_count(const DiscreteDistribution& d, std::int64_t m) {
  std::vector<DiscreteDistribution::Entry> reflected;
  reflected.reserve(d.size());
  for (const auto& [value, p] : d.entries()) {
    if (!value.is_integer() || value.num() < 0 || value.num() > m) {
      throw DomainError("complement_count: support value " + value.to_string() + " outside 0.." +
                        std::to_string(m));
    }
    reflected.emplace_back(Rational(m - value.num()), p);
  }
  return DiscreteDistribution::from_entries(std::move(reflected));
}

double total_variation(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  double l1 = 0.0;
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
      l1 += ia->second;
      ++ia;
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      l1 += ib->second;
      ++ib;
    } else {
      l1 += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return 0.5 * l1;
}

}  // namespace perfest
