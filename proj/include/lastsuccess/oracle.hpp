#ifndef LASTSUCCESS_ORACLE_HPP
#define LASTSUCCESS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lastsuccess/game.hpp"

// Brute-force verification layer. Outcomes are enumerated as bitmasks and
// strategies as explicit pass-sets; nothing here shares code with the
// engine's value recurrence.
namespace lastsuccess::oracle {

namespace detail_oracle {

// Player A wins the outcome encoded by mask (bit k-1 = I_k) under the given
// stage-indexed pass strategies. Holder 0 is A.
inline bool a_wins(const GameSpec& spec, std::uint32_t mask,
                   std::uint32_t pass_a, std::uint32_t pass_b) {
  const std::size_t n = spec.size();
  int holder = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if ((mask >> (k - 1)) & 1u) {
      const std::uint32_t ps = (holder == 0) ? pass_a : pass_b;
      if ((ps >> (k - 1)) & 1u) holder ^= 1;
    }
  }
  const bool last_one = (mask >> (n - 1)) & 1u;
  return last_one ? (holder == 0) : (holder == 1);
}

inline double mask_probability(const GameSpec& spec, std::uint32_t mask) {
  double prob = 1.0;
  for (std::size_t k = 1; k <= spec.size(); ++k) {
    prob *= ((mask >> (k - 1)) & 1u) ? spec.p(k) : spec.q(k);
  }
  return prob;
}

}  // namespace detail_oracle

/// Exact win probability of player A when A plays pass_a and B plays pass_b,
/// by enumeration of all 2^n outcome vectors. All-zeros loses for A.
inline double enumerate_value(const GameSpec& spec, const PassSet& pass_a,
                              const PassSet& pass_b) {
  const std::size_t n = spec.size();
  if (n > 24) throw std::invalid_argument("enumeration limited to n <= 24");
  double total = 0.0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (detail_oracle::a_wins(spec, mask, pass_a.bits, pass_b.bits))
      total += detail_oracle::mask_probability(spec, mask);
  }
  return total;
}

struct MinimaxResult {
  double value;
  PassSet pass_a;  // a maximizing strategy for A
  PassSet pass_b;  // a minimizing reply to it
};

/// max over A's pass-sets of min over B's pass-sets of enumerate_value.
/// The strategy spaces are the full 2^(n-1) stage-indexed pass-sets per
/// player; enumeration is sharded across threads by A's strategy index.
inline MinimaxResult minimax_value(const GameSpec& spec, unsigned threads = 0) {
  const std::size_t n = spec.size();
  if (n > 8) throw std::invalid_argument("minimax enumeration limited to n <= 8");
  const std::uint32_t n_strategies = std::uint32_t{1} << (n - 1);
  const std::uint32_t n_masks = std::uint32_t{1} << n;

  std::vector<double> mask_prob(n_masks);
  for (std::uint32_t mask = 0; mask < n_masks; ++mask)
    mask_prob[mask] = detail_oracle::mask_probability(spec, mask);

  // min over B replies for one fixed A strategy
  const auto min_reply = [&](std::uint32_t a) {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_b = 0;
    for (std::uint32_t b = 0; b < n_strategies; ++b) {
      double v = 0.0;
      for (std::uint32_t mask = 0; mask < n_masks; ++mask) {
        if (detail_oracle::a_wins(spec, mask, a, b)) v += mask_prob[mask];
      }
      if (v < best) {
        best = v;
        best_b = b;
      }
    }
    return std::pair<double, std::uint32_t>{best, best_b};
  };

  std::vector<std::pair<double, std::uint32_t>> rows(n_strategies);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, n_strategies);
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t]() {
      for (std::uint32_t a = t; a < n_strategies; a += threads)
        rows[a] = min_reply(a);
    }));
  }
  for (auto& j : jobs) j.get();

  double value = -std::numeric_limits<double>::infinity();
  std::uint32_t best_a = 0;
  for (std::uint32_t a = 0; a < n_strategies; ++a) {
    if (rows[a].first > value) {
      value = rows[a].first;
      best_a = a;
    }
  }
  return MinimaxResult{value, PassSet{best_a}, PassSet{rows[best_a].second}};
}

struct BestResponse {
  PassSet strategy;
  double value;  // responder's win probability
};

/// The responder's highest-value pass-set against a fixed opponent strategy,
/// by backward induction over (stage, holder). Ties are resolved towards the
/// lexicographically smallest stage set.
inline BestResponse best_response(const GameSpec& spec, const PassSet& opponent,
                                  bool responder_moves_first = true) {
  const std::size_t n = spec.size();
  if (n > 16) throw std::invalid_argument("best response limited to n <= 16");
  const int resp = responder_moves_first ? 0 : 1;

  // w[h] = P(responder wins | player h about to observe the current trial)
  double w[2] = {resp == 0 ? spec.p(n) : spec.q(n),
                 resp == 1 ? spec.p(n) : spec.q(n)};
  std::vector<int> forced_pass;  // strictly better to pass
  std::vector<int> tie;          // indifferent stages
  for (std::size_t k = n - 1; k >= 1; --k) {
    double next[2];
    for (int h = 0; h < 2; ++h) {
      double on_one;
      if (h == resp) {
        const double keep = w[h];
        const double pass = w[1 - h];
        if (pass > keep) {
          forced_pass.push_back(static_cast<int>(k));
          on_one = pass;
        } else {
          if (pass == keep) tie.push_back(static_cast<int>(k));
          on_one = keep;
        }
      } else {
        on_one = opponent.contains(static_cast<int>(k)) ? w[resp] : w[h];
      }
      next[h] = spec.p(k) * on_one + spec.q(k) * w[h];
    }
    w[0] = next[0];
    w[1] = next[1];
  }

  PassSet ps;
  for (int s : forced_pass) ps.add(s);
  if (!forced_pass.empty()) {
    // adding a tied stage below the largest forced stage shrinks the set in
    // lexicographic order over sorted stage lists
    const int top = *std::max_element(forced_pass.begin(), forced_pass.end());
    for (int s : tie)
      if (s < top) ps.add(s);
  }
  return BestResponse{ps, w[0]};
}

}  // namespace lastsuccess::oracle

#endif  // LASTSUCCESS_ORACLE_HPP
