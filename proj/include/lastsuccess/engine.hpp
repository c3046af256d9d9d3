#ifndef LASTSUCCESS_ENGINE_HPP
#define LASTSUCCESS_ENGINE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lastsuccess/game.hpp"

// Exact solvers for the adversarial last-success game. Two players observe
// Bernoulli trials in turn; after a 1 the turn-holder may pass the turn.
// The holder of the final trial wins iff it is a 1.
namespace lastsuccess::engine {

/// Solved values V_1..V_n: V_k is the win probability of whoever holds the
/// turn when about to observe trial k, under optimal play by both sides.
struct ValueTable {
  std::vector<double> values;  // values[k-1] = V_k

  std::size_t size() const { return values.size(); }
  double at(std::size_t stage) const { return values.at(stage - 1); }
  double v1() const { return values.front(); }
};

// V_k = p_k * max(V_{k+1}, 1 - V_{k+1}) + (1 - p_k) * V_{k+1},  V_n = p_n.
inline ValueTable solve_dp(const GameSpec& spec) {
  const std::size_t n = spec.size();
  std::vector<double> v(n);
  v[n - 1] = spec.p(n);
  for (std::size_t k = n - 1; k >= 1; --k) {
    const double next = v[k];
    v[k - 1] = spec.p(k) * std::max(next, 1.0 - next) + spec.q(k) * next;
  }
  return ValueTable{std::move(v)};
}

/// Threshold stage u_r: the last stage k >= r with p_k >= 1/2, or r when no
/// such stage exists. Optimal play keeps the turn before u_r and passes at
/// every opportunity from u_r on.
struct ThresholdStrategy {
  std::size_t threshold;
};

inline ThresholdStrategy threshold_index(const GameSpec& spec, std::size_t r = 1) {
  const std::size_t n = spec.size();
  if (r < 1 || r > n) throw std::out_of_range("start stage out of range");
  for (std::size_t k = n; k >= r; --k) {
    if (spec.p(k) >= 0.5) return ThresholdStrategy{k};
  }
  return ThresholdStrategy{r};
}

/// The canonical optimal pure strategy: pass at every decision stage from the
/// threshold on.
inline PassSet threshold_pass_set(const GameSpec& spec) {
  const std::size_t n = spec.size();
  const std::size_t u = threshold_index(spec).threshold;
  PassSet ps;
  for (std::size_t k = u; k + 1 <= n; ++k) ps.add(static_cast<int>(k));
  return ps;
}

// P(odd number of successes) = (1 - prod(1 - 2 p_i)) / 2.
inline double parity_odd_probability(const std::vector<double>& probs) {
  double prod = 1.0;
  for (double p : probs) {
    if (p < 0.0 || p > 1.0 || !std::isfinite(p))
      throw std::invalid_argument("probability out of range");
    prod *= 1.0 - 2.0 * p;
  }
  return (1.0 - prod) / 2.0;
}

// Same quantity by the two-state parity convolution; kept as an independent
// route, must agree with the product form to 1e-12.
inline double parity_odd_probability_convolution(const std::vector<double>& probs) {
  double odd = 0.0;
  for (double p : probs) {
    if (p < 0.0 || p > 1.0 || !std::isfinite(p))
      throw std::invalid_argument("probability out of range");
    odd = odd * (1.0 - p) + (1.0 - odd) * p;
  }
  return odd;
}

/// Player A's win probability via the parity representation: with threshold u,
/// A wins iff the number of 1's from stage u on is odd.
inline double win_probability(const GameSpec& spec) {
  const std::size_t u = threshold_index(spec).threshold;
  std::vector<double> suffix(spec.params().begin() + (u - 1), spec.params().end());
  return parity_odd_probability(suffix);
}

/// Closed form for equal parameters p < 1/2: V_1 = (1 - (1-2p)^n) / 2.
/// For p >= 1/2 the closed form does not apply and the DP is used instead.
inline double equal_p_value(double p, std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!std::isfinite(p) || p < 0.0 || p > 1.0)
    throw std::invalid_argument("p out of range");
  if (p >= 0.5) {
    return solve_dp(GameSpec(std::vector<double>(n, p))).v1();
  }
  return (1.0 - detail::pow_int(1.0 - 2.0 * p, n)) / 2.0;
}

/// Value of the game with p_i = 1/n: 1 for n = 1, else (1 - (1-2/n)^n)/2,
/// decreasing in n towards 1/2 - 1/(2 e^2).
inline double reciprocal_n_value(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n == 1) return 1.0;
  return (1.0 - detail::pow_int(1.0 - 2.0 / static_cast<double>(n), n)) / 2.0;
}

inline double reciprocal_n_limit() { return 0.5 - 0.5 * std::exp(-2.0); }

/// Classical (single-player) last-success problem, solved by the odds
/// theorem: stop on the first 1 at or after stage s.
struct LspResult {
  std::size_t stop_index;
  double win_probability;
};

inline std::size_t lsp_odds_index(const GameSpec& spec) {
  const std::size_t n = spec.size();
  double sum = 0.0;
  for (std::size_t k = n; k >= 1; --k) {
    sum += spec.odds(k);  // throws on p = 1
    if (sum >= 1.0) return k;
  }
  return 1;  // total odds below 1
}

inline LspResult lsp_odds_value(const GameSpec& spec) {
  const std::size_t n = spec.size();
  const std::size_t s = lsp_odds_index(spec);
  double prod_q = 1.0;
  double sum_r = 0.0;
  for (std::size_t j = s; j <= n; ++j) {
    prod_q *= spec.q(j);
    sum_r += spec.odds(j);
  }
  return LspResult{s, prod_q * sum_r};
}

/// Stopping-rule DP fallback for the single-player problem. Handles p_i = 1,
/// where the odds ratio is undefined.
inline double lsp_dp_value(const GameSpec& spec) {
  const std::size_t n = spec.size();
  // tail[i] = P(no success after stage i) = prod_{j>i} q_j
  std::vector<double> tail(n + 1);
  tail[n] = 1.0;
  for (std::size_t i = n; i >= 1; --i) tail[i - 1] = tail[i] * spec.q(i);
  double cont = 0.0;  // value of continuing past stage i
  for (std::size_t i = n; i >= 1; --i) {
    cont = spec.p(i) * std::max(tail[i], cont) + spec.q(i) * cont;
  }
  return cont;
}

}  // namespace lastsuccess::engine

#endif  // LASTSUCCESS_ENGINE_HPP
