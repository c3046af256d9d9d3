#ifndef LASTSUCCESS_MARKOV_HPP
#define LASTSUCCESS_MARKOV_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lastsuccess/game.hpp"

// The game over a two-state Markov chain of trials, and a tester for the
// conjecture that the optimal pass rule compares every forward conditional
// P(I_i = 1 | I_k = 1) against 1/2.
namespace lastsuccess::markov {

/// Chain description: marginal of the first trial plus the transition rows
/// alpha_j = P(I_{j+1}=1 | I_j=0) and beta_j = P(I_{j+1}=0 | I_j=1).
struct MarkovSpec {
  double p1;
  std::vector<double> alpha;
  std::vector<double> beta;

  MarkovSpec(double p1_, std::vector<double> alpha_, std::vector<double> beta_)
      : p1(p1_), alpha(std::move(alpha_)), beta(std::move(beta_)) {
    if (alpha.size() != beta.size())
      throw std::invalid_argument("alpha/beta length mismatch");
    auto check = [](double x) {
      if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw std::invalid_argument("probability out of range");
    };
    check(p1);
    for (double a : alpha) check(a);
    for (double b : beta) check(b);
  }

  std::size_t n() const { return alpha.size() + 1; }
};

/// Encode independent trials as a chain: both transition rows give the next
/// stage's marginal.
inline MarkovSpec independent_encoding(const GameSpec& spec) {
  std::vector<double> alpha, beta;
  for (std::size_t k = 2; k <= spec.size(); ++k) {
    alpha.push_back(spec.p(k));
    beta.push_back(1.0 - spec.p(k));
  }
  return MarkovSpec(spec.p(1), std::move(alpha), std::move(beta));
}

// P(I_i = 1) propagated from P(I_k = 1) = w0.
inline double propagate_success(const MarkovSpec& spec, std::size_t k,
                                std::size_t i, double w0) {
  if (k < 1 || i > spec.n() || k > i)
    throw std::out_of_range("stage order violation");
  double w = w0;
  for (std::size_t j = k; j < i; ++j) {
    w = w * (1.0 - spec.beta[j - 1]) + (1.0 - w) * spec.alpha[j - 1];
  }
  return w;
}

/// p_{i,k} = P(I_i = 1 | I_k = 1), for k < i.
inline double conditional_success(const MarkovSpec& spec, std::size_t k,
                                  std::size_t i) {
  if (k >= i) throw std::out_of_range("requires k < i");
  return propagate_success(spec, k, i, 1.0);
}

enum class Action { keep, pass };

/// Optimal value and per-stage actions from exact backward induction over
/// (stage, last observed value). Values are holder-relative: passing turns a
/// continuation value v into 1 - v for the player who passed.
struct OptimalPolicy {
  double value;                       // player A's win probability
  std::vector<Action> decisions;      // action after I_k = 1, stages 1..n-1
  std::vector<double> keep_values;    // holder's value of keeping at each stage
};

inline OptimalPolicy markov_optimal(const MarkovSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<Action> decisions(n - 1, Action::keep);
  std::vector<double> keep_values(n - 1, 0.0);
  // h[x] = holder's value observing trial k+1 given I_k = x
  double h[2] = {0.0, 0.0};
  for (std::size_t k = n - 1; k >= 1; --k) {
    double next[2];
    for (int x = 0; x < 2; ++x) {
      const double p_next = x ? 1.0 - spec.beta[k - 1] : spec.alpha[k - 1];
      double on_one = 1.0, on_zero = 0.0;
      if (k + 1 < n) {
        on_one = std::max(h[1], 1.0 - h[1]);
        on_zero = h[0];
      }
      next[x] = p_next * on_one + (1.0 - p_next) * on_zero;
    }
    h[0] = next[0];
    h[1] = next[1];
    keep_values[k - 1] = h[1];
    decisions[k - 1] = (h[1] >= 1.0 - h[1]) ? Action::keep : Action::pass;
  }
  double value;
  if (n == 1) {
    value = spec.p1;
  } else {
    value = spec.p1 * std::max(h[1], 1.0 - h[1]) + (1.0 - spec.p1) * h[0];
  }
  return OptimalPolicy{value, std::move(decisions), std::move(keep_values)};
}

/// The conjectured rule: after observing I_k = 1, pass iff p_{i,k} < 1/2 for
/// every i > k.
inline std::vector<Action> conjectured_decisions(const MarkovSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<Action> decisions(n - 1, Action::keep);
  for (std::size_t k = 1; k < n; ++k) {
    bool all_below_half = true;
    for (std::size_t i = k + 1; i <= n; ++i) {
      if (conditional_success(spec, k, i) >= 0.5) {
        all_below_half = false;
        break;
      }
    }
    decisions[k - 1] = all_below_half ? Action::pass : Action::keep;
  }
  return decisions;
}

struct Mismatch {
  std::size_t stage;
  Action conjectured;
  Action optimal;
  double gap;  // value lost by the conjectured action
};

struct ConjectureReport {
  MarkovSpec spec;
  bool agrees;
  std::vector<Mismatch> mismatches;
};

/// Compares the conjectured rule against the exact optimum stage by stage.
/// A mismatch with gap above the tie tolerance marks a strict violation;
/// ties at value 1/2 are indifferent and do not count.
inline ConjectureReport conjecture_check(const MarkovSpec& spec,
                                         double tie_tolerance = 1e-9) {
  const OptimalPolicy optimal = markov_optimal(spec);
  const std::vector<Action> conjectured = conjectured_decisions(spec);
  std::vector<Mismatch> mismatches;
  bool agrees = true;
  for (std::size_t k = 1; k < spec.n(); ++k) {
    const Action opt = optimal.decisions[k - 1];
    const Action conj = conjectured[k - 1];
    if (opt == conj) continue;
    const double gap = std::fabs(2.0 * optimal.keep_values[k - 1] - 1.0);
    mismatches.push_back(Mismatch{k, conj, opt, gap});
    if (gap > tie_tolerance) agrees = false;
  }
  return ConjectureReport{spec, agrees, std::move(mismatches)};
}

/// Exhaustive grid over p1, alpha_j, beta_j in {step, 2 step, ...} for every
/// n in [2, n_max], followed by seeded random specs. Returns the reports of
/// strict violations only; deterministic for fixed arguments.
inline std::vector<ConjectureReport> counterexample_search(std::size_t n_max,
                                                           double grid_step,
                                                           std::size_t random_trials,
                                                           std::uint64_t seed) {
  if (n_max > 6) throw std::invalid_argument("grid search limited to n_max <= 6");
  if (!(grid_step > 0.0 && grid_step < 1.0))
    throw std::invalid_argument("grid step must lie in (0,1)");
  std::vector<double> values;
  for (double v = grid_step; v < 1.0 - 1e-12; v += grid_step) values.push_back(v);

  std::vector<ConjectureReport> violations;
  const auto consider = [&](const MarkovSpec& spec) {
    ConjectureReport report = conjecture_check(spec);
    if (!report.agrees) violations.push_back(std::move(report));
  };

  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t dims = 1 + 2 * (n - 1);
    std::vector<std::size_t> idx(dims, 0);
    while (true) {
      std::vector<double> alpha(n - 1), beta(n - 1);
      for (std::size_t j = 0; j < n - 1; ++j) {
        alpha[j] = values[idx[1 + j]];
        beta[j] = values[idx[n + j]];
      }
      consider(MarkovSpec(values[idx[0]], std::move(alpha), std::move(beta)));
      // odometer
      std::size_t d = 0;
      while (d < dims && ++idx[d] == values.size()) idx[d++] = 0;
      if (d == dims) break;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < random_trials; ++t) {
    const std::size_t n =
        2 + static_cast<std::size_t>(rng() % std::max<std::size_t>(1, n_max - 1));
    const double p1 = unit(rng);
    std::vector<double> alpha(n - 1), beta(n - 1);
    for (std::size_t j = 0; j < n - 1; ++j) alpha[j] = unit(rng);
    for (std::size_t j = 0; j < n - 1; ++j) beta[j] = unit(rng);
    consider(MarkovSpec(p1, std::move(alpha), std::move(beta)));
  }
  return violations;
}

}  // namespace lastsuccess::markov

#endif  // LASTSUCCESS_MARKOV_HPP
