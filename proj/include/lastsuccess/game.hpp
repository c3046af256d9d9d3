#ifndef LASTSUCCESS_GAME_HPP
#define LASTSUCCESS_GAME_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lastsuccess {

namespace detail {

// Integer power by binary exponentiation. Error stays within a few ulps per
// squaring, which beats the exp(n*log x) route for bases near 0 or 1.
inline double pow_int(double base, unsigned long long n) {
  double result = 1.0;
  double b = base;
  while (n != 0) {
    if (n & 1ULL) result *= b;
    n >>= 1;
    if (n != 0) b *= b;
  }
  return result;
}

}  // namespace detail

/// Ordered sequence of success probabilities p_1..p_n for independent
/// Bernoulli trials. Stages are 1-based throughout the library.
class GameSpec {
 public:
  explicit GameSpec(std::vector<double> params) : params_(std::move(params)) {
    if (params_.empty()) throw std::invalid_argument("empty spec");
    for (std::size_t i = 0; i < params_.size(); ++i) {
      const double p = params_[i];
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw std::invalid_argument("parameter out of range [0,1] at index " +
                                    std::to_string(i + 1));
      }
    }
  }

  std::size_t size() const { return params_.size(); }

  double p(std::size_t stage) const { return params_.at(stage - 1); }
  double q(std::size_t stage) const { return 1.0 - p(stage); }

  // Odds ratio r_i = p_i / (1 - p_i). Undefined at p_i = 1.
  double odds(std::size_t stage) const {
    const double pi = p(stage);
    if (pi >= 1.0) throw std::domain_error("degenerate odds: p = 1 at stage " +
                                           std::to_string(stage));
    return pi / (1.0 - pi);
  }

  const std::vector<double>& params() const { return params_; }

 private:
  std::vector<double> params_;
};

inline GameSpec validate_spec(const std::vector<double>& raw) {
  return GameSpec(raw);
}

/// A pure strategy: the set of stages at which a turn-holder passes upon
/// observing a 1. Stage n carries no decision and must not be included.
struct PassSet {
  std::uint32_t bits = 0;  // bit (k-1) set <=> pass at stage k

  static PassSet from_stages(std::initializer_list<int> stages) {
    PassSet ps;
    for (int s : stages) ps.add(s);
    return ps;
  }

  void add(int stage) {
    if (stage < 1 || stage > 32) throw std::out_of_range("pass stage out of range");
    bits |= (std::uint32_t{1} << (stage - 1));
  }

  bool contains(int stage) const {
    if (stage < 1 || stage > 32) return false;
    return (bits >> (stage - 1)) & 1u;
  }

  std::vector<int> stages() const {
    std::vector<int> out;
    for (int s = 1; s <= 32; ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }

  bool operator==(const PassSet& other) const { return bits == other.bits; }
};

}  // namespace lastsuccess

#endif  // LASTSUCCESS_GAME_HPP
