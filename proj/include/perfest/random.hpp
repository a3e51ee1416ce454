#pragma once

#include <cstdint>
#include <random>

namespace perfest {

using Rng = std::mt19937_64;

/// Generator for stream `stream`, item `index` under a master seed.
///
/// The three 64-bit values are split into six 32-bit words and fed through
/// std::seed_seq, so (seed, stream, index) triples give independent-looking
/// streams and the same triple always gives the same stream. Experiment
/// runners use stream = window size and index = trial number.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),  static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

/// Uniform draw in [0, 1).
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Beta(a, b) via the ratio of two gamma draws.
inline double sample_beta(Rng& rng, double a, double b) {
  std::gamma_distribution<double> ga(a, 1.0);
  std::gamma_distribution<double> gb(b, 1.0);
  for (;;) {
    const double x = ga(rng);
    const double y = gb(rng);
    // Both draws can underflow to 0 for shape parameters well below 1.
    if (x + y > 0.0) return x / (x + y);
  }
}

}  // namespace perfest
