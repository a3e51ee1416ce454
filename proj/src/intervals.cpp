#include "perfest/intervals.hpp"

#include <string>

#include "perfest/errors.hpp"

namespace perfest {

HdiInterval hdi(const DiscreteDistribution& d, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("hdi: alpha " + std::to_string(alpha) + " is outside (0, 1)");
  }
  if (d.empty()) throw DomainError("hdi: empty distribution");

  const auto sorted = d.entries();
  std::size_t l = 0;
  std::size_t u = sorted.size() - 1;
  double tail = 0.0;
  while (l < u) {
    const double p_l = sorted[l].second;
    const double p_u = sorted[u].second;
    if (p_l < p_u) {
      if (tail + p_l >= alpha) break;
      tail += p_l;
      ++l;
    } else {
      if (tail + p_u >= alpha) break;
      tail += p_u;
      --u;
    }
  }

  HdiInterval out;
  out.alpha = alpha;
  out.lower_value = sorted[l].first;
  out.upper_value = sorted[u].first;
  out.lower = out.lower_value.to_double();
  out.upper = out.upper_value.to_double();
  for (std::size_t i = l; i <= u; ++i) out.covered_mass += sorted[i].second;
  return out;
}

}  // namespace perfest
