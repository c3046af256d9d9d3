#ifndef LASTSUCCESS_VARIANTS_HPP
#define LASTSUCCESS_VARIANTS_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lastsuccess/engine.hpp"
#include "lastsuccess/game.hpp"

// Variant games: repeat-on-all-zeros, the m-player hot-potato framing, and
// games whose parameters are themselves uniform random draws.
namespace lastsuccess::variants {

/// Repeat-on-all-zeros value for p_i = 1/n, evaluated from the published
/// closed form with every power normalized by n^n so that large n stay in
/// range: ((n-2)/n)^n - ((n-1)/n)^n (n/(n-1))^n over 2(((n-1)/n)^n - 1).
inline double repeat_value_reciprocal(std::size_t n) {
  if (n < 2) throw std::invalid_argument("repeat variant needs n >= 2");
  const double nd = static_cast<double>(n);
  const double a = detail::pow_int((nd - 2.0) / nd, n);
  const double b = detail::pow_int((nd - 1.0) / nd, n);
  const double c = detail::pow_int(nd / (nd - 1.0), n);
  return (a - b * c) / (2.0 * (b - 1.0));
}

inline double repeat_value_limit() { return (1.0 + std::exp(1.0)) / (2.0 * std::exp(1.0)); }

/// Win probability under the rule that an all-zeros realization restarts the
/// game: the unconditional value conditioned on at least one success.
/// Only defined in the all-pass regime (every p_i < 1/2).
inline double repeat_value(const GameSpec& spec) {
  double prob_all_zero = 1.0;
  bool any_positive = false;
  for (std::size_t k = 1; k <= spec.size(); ++k) {
    if (spec.p(k) >= 0.5)
      throw std::domain_error("repeat variant requires all p_i < 1/2");
    if (spec.p(k) > 0.0) any_positive = true;
    prob_all_zero *= spec.q(k);
  }
  if (!any_positive) throw std::domain_error("repeat variant requires some p_i > 0");
  return engine::win_probability(spec) / (1.0 - prob_all_zero);
}

/// Per-player loss probabilities in the m-player hot-potato game, players
/// ordered 1..m. Entries sum to 1.
struct LossDistribution {
  std::vector<double> per_player;
};

/// Under always-pass play the turn token advances on every success, so the
/// loser is player 1 + (N mod m) with N the total success count. Computed by
/// an m-state residue convolution over the trials.
inline LossDistribution multiplayer_loss_distribution(const GameSpec& spec, int m) {
  if (m < 2) throw std::invalid_argument("player count must be >= 2");
  for (std::size_t k = 1; k <= spec.size(); ++k) {
    if (spec.p(k) > 0.5)
      throw std::domain_error("always-pass regime requires all p_i <= 1/2");
  }
  std::vector<double> residue(static_cast<std::size_t>(m), 0.0);
  residue[0] = 1.0;
  std::vector<double> next(residue.size());
  for (std::size_t k = 1; k <= spec.size(); ++k) {
    const double p = spec.p(k);
    for (int j = 0; j < m; ++j) {
      next[j] = residue[j] * (1.0 - p) + residue[(j + m - 1) % m] * p;
    }
    residue.swap(next);
  }
  return LossDistribution{std::move(residue)};
}

/// Limit of the reciprocal-parameter loss distribution as n grows: residue
/// masses of a unit-rate Poisson count mod m, via the roots-of-unity filter
/// P(N = j mod m) = (1/m) sum_t w^(-tj) exp(w^t - 1), w = e^(2 pi i / m).
inline LossDistribution poisson_mod_limit(int m) {
  if (m < 2) throw std::invalid_argument("player count must be >= 2");
  const double pi = std::acos(-1.0);
  std::vector<double> loss(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::complex<double> acc = 0.0;
    for (int t = 0; t < m; ++t) {
      const std::complex<double> w =
          std::polar(1.0, 2.0 * pi * static_cast<double>(t) / m);
      acc += std::exp(w - 1.0) * std::polar(1.0, -2.0 * pi * t * j / m);
    }
    loss[j] = acc.real() / m;
  }
  return LossDistribution{std::move(loss)};
}

/// X_k: value to the turn-holder with k trials left, all parameters drawn
/// U[0,1/2]. Closed form 2^(-1-k) (2^k - 1).
inline double rp_suffix_value(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return std::ldexp(1.0, -1 - k) * (detail::pow_int(2.0, k) - 1.0);
}

// Recurrence route X_i = (1 + 2 X_{i-1}) / 4, X_0 = 0; test oracle for the
// closed form.
inline double rp_suffix_value_recurrence(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  double x = 0.0;
  for (int i = 1; i <= k; ++i) x = (1.0 + 2.0 * x) / 4.0;
  return x;
}

/// J_k: player A's value when the pivot parameter (k-th from the end) is
/// drawn U[1/2,1] and the k-1 trailing parameters are drawn U[0,1/2].
inline double rp_pivot_value(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return (1.0 + std::ldexp(1.0, -k)) / 2.0;
}

/// E(n): player A's mean win probability when all n parameters are drawn
/// U[0,1]. Closed form 2 (1 - 4^(-n)) / 3.
inline double rp_expected_value(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return 2.0 * (1.0 - detail::pow_int(0.25, n)) / 3.0;
}

// Mixture route: condition on the position of the last parameter >= 1/2.
// A pivot k trials from the end occurs with probability 2^(-k); no pivot with
// probability 2^(-n), leaving the all-sub-half value X_n.
inline double rp_expected_value_assembled(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double e = std::ldexp(1.0, -n) * rp_suffix_value(n);
  for (int k = 1; k <= n; ++k) e += std::ldexp(1.0, -k) * rp_pivot_value(k);
  return e;
}

}  // namespace lastsuccess::variants

#endif  // LASTSUCCESS_VARIANTS_HPP
