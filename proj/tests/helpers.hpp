#ifndef LASTSUCCESS_TESTS_HELPERS_HPP
#define LASTSUCCESS_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "lastsuccess/game.hpp"

namespace test_helpers {

inline std::vector<double> random_params(std::mt19937_64& rng, std::size_t n,
                                         double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> p(n);
  for (auto& x : p) x = dist(rng);
  return p;
}

inline lastsuccess::GameSpec random_spec(std::mt19937_64& rng, std::size_t n_max,
                                         double lo = 0.0, double hi = 1.0) {
  std::uniform_int_distribution<std::size_t> len(1, n_max);
  return lastsuccess::GameSpec(random_params(rng, len(rng), lo, hi));
}

}  // namespace test_helpers

#endif
