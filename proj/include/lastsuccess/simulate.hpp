#ifndef LASTSUCCESS_SIMULATE_HPP
#define LASTSUCCESS_SIMULATE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lastsuccess/engine.hpp"
#include "lastsuccess/game.hpp"

// Seeded Monte Carlo cross-checks. The generator is counter-based so that
// results depend only on (seed, sample index), never on scheduling: draw j of
// sample i is mix64(mix64(seed) + ((i << 32) + j) * 0x9E3779B97F4A7C15),
// mapped to [0,1) as (x >> 11) * 2^-53 (SplitMix64 finalizer).
namespace lastsuccess::simulate {

namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Stream of unit-interval draws for one sample of one seeded run.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t sample_index)
      : key_(mix64(seed)), counter_(sample_index << 32) {}

  double next_unit() { return (mix64(key_ + (counter_++) * kGamma) >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace rng

/// Monte Carlo estimate with its 95% normal-approximation half width.
struct SimReport {
  double estimate;
  std::uint64_t samples;
  std::uint64_t seed;
  double half_width_95;
};

inline SimReport make_report(std::uint64_t hits, std::uint64_t samples,
                             std::uint64_t seed) {
  const double est = static_cast<double>(hits) / static_cast<double>(samples);
  const double hw = 1.96 * std::sqrt(est * (1.0 - est) / static_cast<double>(samples));
  return SimReport{est, samples, seed, hw};
}

/// Frequency estimate of player A's win probability when A plays pass_a and
/// B plays pass_b. Shards split the sample range contiguously and their
/// integer win counts are combined in shard order; because the generator is
/// keyed by global sample index the result is also shard-count invariant.
inline SimReport simulate(const GameSpec& spec, const PassSet& pass_a,
                          const PassSet& pass_b, std::uint64_t samples,
                          std::uint64_t seed, unsigned shards = 1) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (shards < 1) throw std::invalid_argument("shards must be >= 1");
  const std::size_t n = spec.size();
  std::uint64_t wins = 0;
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t lo = samples * s / shards;
    const std::uint64_t hi = samples * (s + 1) / shards;
    std::uint64_t shard_wins = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      rng::SampleStream stream(seed, i);
      int holder = 0;
      bool last_one = false;
      for (std::size_t k = 1; k <= n; ++k) {
        const bool one = stream.next_unit() < spec.p(k);
        if (k == n) {
          last_one = one;
        } else if (one) {
          const PassSet& ps = (holder == 0) ? pass_a : pass_b;
          if (ps.contains(static_cast<int>(k))) holder ^= 1;
        }
      }
      if (last_one ? (holder == 0) : (holder == 1)) ++shard_wins;
    }
    wins += shard_wins;
  }
  return make_report(wins, samples, seed);
}

/// Per sample: draw n parameters from U[0,1], have both players use the
/// threshold strategy of the drawn spec, and record whether A wins. The
/// estimate targets E(n) = 2 (1 - 4^-n) / 3.
inline SimReport simulate_random_params(std::size_t n, std::uint64_t samples,
                                        std::uint64_t seed, unsigned shards = 1) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (shards < 1) throw std::invalid_argument("shards must be >= 1");
  std::uint64_t wins = 0;
  std::vector<double> params(n);
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t lo = samples * s / shards;
    const std::uint64_t hi = samples * (s + 1) / shards;
    std::uint64_t shard_wins = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      rng::SampleStream stream(seed, i);
      for (std::size_t k = 0; k < n; ++k) params[k] = stream.next_unit();
      // threshold: last parameter >= 1/2, both players pass from there on
      std::size_t u = 1;
      for (std::size_t k = n; k >= 1; --k) {
        if (params[k - 1] >= 0.5) {
          u = k;
          break;
        }
      }
      int holder = 0;
      bool last_one = false;
      for (std::size_t k = 1; k <= n; ++k) {
        const bool one = stream.next_unit() < params[k - 1];
        if (k == n) {
          last_one = one;
        } else if (one && k >= u) {
          holder ^= 1;  // both sides pass at every opportunity from u
        }
      }
      if (last_one ? (holder == 0) : (holder == 1)) ++shard_wins;
    }
    wins += shard_wins;
  }
  return make_report(wins, samples, seed);
}

/// Token-passing simulation of the m-player game under always-pass play.
/// Returns each player's loss frequency, player order 1..m.
inline std::vector<SimReport> simulate_multiplayer(const GameSpec& spec, int m,
                                                   std::uint64_t samples,
                                                   std::uint64_t seed,
                                                   unsigned shards = 1) {
  if (m < 2) throw std::invalid_argument("player count must be >= 2");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (shards < 1) throw std::invalid_argument("shards must be >= 1");
  const std::size_t n = spec.size();
  std::vector<std::uint64_t> losses(static_cast<std::size_t>(m), 0);
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint64_t lo = samples * s / shards;
    const std::uint64_t hi = samples * (s + 1) / shards;
    std::vector<std::uint64_t> shard_losses(losses.size(), 0);
    for (std::uint64_t i = lo; i < hi; ++i) {
      rng::SampleStream stream(seed, i);
      int token = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (stream.next_unit() < spec.p(k)) token = (token + 1) % m;
      }
      ++shard_losses[static_cast<std::size_t>(token)];
    }
    for (std::size_t j = 0; j < losses.size(); ++j) losses[j] += shard_losses[j];
  }
  std::vector<SimReport> reports;
  reports.reserve(losses.size());
  for (std::uint64_t count : losses) reports.push_back(make_report(count, samples, seed));
  return reports;
}

}  // namespace lastsuccess::simulate

#endif  // LASTSUCCESS_SIMULATE_HPP
