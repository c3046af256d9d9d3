#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "lastsuccess/engine.hpp"
#include "lastsuccess/markov.hpp"
#include "lastsuccess/serialize.hpp"

using namespace lastsuccess;
using test_helpers::random_spec;

TEST_CASE("MarkovSpec validation") {
  CHECK_THROWS(markov::MarkovSpec(0.5, {0.1}, {}));
  CHECK_THROWS(markov::MarkovSpec(1.5, {}, {}));
  CHECK_THROWS(markov::MarkovSpec(0.5, {0.1, -0.2}, {0.3, 0.4}));
  CHECK(markov::MarkovSpec(0.5, {0.1}, {0.2}).n() == 2);
}

TEST_CASE("conditional_success") {
  const markov::MarkovSpec spec(0.4, {0.2, 0.3, 0.1}, {0.6, 0.2, 0.9});
  CHECK(markov::conditional_success(spec, 1, 2) == Catch::Approx(0.4).margin(1e-15).epsilon(0));
  CHECK(markov::conditional_success(spec, 2, 3) == Catch::Approx(0.8).margin(1e-15).epsilon(0));

  const markov::MarkovSpec frozen(0.7, {0.0, 0.0}, {0.0, 0.0});
  CHECK(markov::conditional_success(frozen, 1, 3) == 1.0);

  const markov::MarkovSpec mixing(0.3, {0.5, 0.5, 0.5}, {0.5, 0.5, 0.5});
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t i = k + 1; i <= 4; ++i)
      CHECK(markov::conditional_success(mixing, k, i) == Catch::Approx(0.5).margin(1e-15).epsilon(0));

  CHECK_THROWS(markov::conditional_success(spec, 2, 2));
  CHECK_THROWS(markov::conditional_success(spec, 3, 1));
}

TEST_CASE("conditional propagation telescopes") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    std::vector<double> alpha(n - 1), beta(n - 1);
    for (auto& a : alpha) a = unit(rng);
    for (auto& b : beta) b = unit(rng);
    const markov::MarkovSpec spec(unit(rng), alpha, beta);
    const std::size_t k = 1 + rng() % (n - 2);
    const std::size_t j = k + 1 + rng() % (n - k - 1);
    const std::size_t i = j + 1 + rng() % (n - j);
    const double direct = markov::conditional_success(spec, k, i);
    const double via_j = markov::propagate_success(
        spec, j, i, markov::conditional_success(spec, k, j));
    CHECK(direct == Catch::Approx(via_j).margin(1e-12).epsilon(0));
  }
}

TEST_CASE("markov_optimal on pinned examples") {
  // independent encoding of [0.3, 0.3, 0.3]
  const auto enc = markov::independent_encoding(GameSpec({0.3, 0.3, 0.3}));
  CHECK(markov::markov_optimal(enc).value == Catch::Approx(0.468).margin(1e-15).epsilon(0));

  CHECK(markov::markov_optimal(markov::MarkovSpec(0.7, {}, {})).value ==
        Catch::Approx(0.7).margin(1e-15).epsilon(0));

  // after I_1 = 1 the chain almost surely flips: passing is optimal
  const markov::MarkovSpec flip(0.5, {0.9}, {0.9});
  const auto policy = markov::markov_optimal(flip);
  CHECK(policy.value == Catch::Approx(0.9).margin(1e-15).epsilon(0));
  CHECK(policy.decisions[0] == markov::Action::pass);
}

TEST_CASE("independent encodings reduce to the engine") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const GameSpec spec = random_spec(rng, 20);
    const auto enc = markov::independent_encoding(spec);
    CHECK(markov::markov_optimal(enc).value ==
          Catch::Approx(engine::solve_dp(spec).v1()).margin(1e-12).epsilon(0));
  }
}

TEST_CASE("conjectured_decisions on independent encodings") {
  // all parameters below 1/2: pass at every decision stage
  const auto low = markov::conjectured_decisions(
      markov::independent_encoding(GameSpec({0.3, 0.2, 0.4})));
  for (auto action : low) CHECK(action == markov::Action::pass);

  // final parameter at least 1/2: keep at every stage before it
  const auto high = markov::conjectured_decisions(
      markov::independent_encoding(GameSpec({0.3, 0.2, 0.8})));
  for (auto action : high) CHECK(action == markov::Action::keep);

  const auto flip = markov::conjectured_decisions(markov::MarkovSpec(0.5, {0.9}, {0.9}));
  CHECK(flip[0] == markov::Action::pass);
}

TEST_CASE("conjecture_check") {
  SECTION("independent encodings never violate") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const auto report =
          markov::conjecture_check(markov::independent_encoding(random_spec(rng, 12)));
      CHECK(report.agrees);
    }
  }

  SECTION("frozen chain keeps forever") {
    const markov::MarkovSpec frozen(0.6, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
    const auto report = markov::conjecture_check(frozen);
    CHECK(report.agrees);
    const auto policy = markov::markov_optimal(frozen);
    for (auto action : policy.decisions) CHECK(action == markov::Action::keep);
    // A wins exactly when I_1 = 1: the frozen chain then stays at 1
    CHECK(policy.value == Catch::Approx(0.6).margin(1e-15).epsilon(0));
  }

  SECTION("dependent grid emits a report either way") {
    const auto report = markov::conjecture_check(markov::MarkovSpec(0.5, {0.9}, {0.9}));
    CHECK((report.agrees || !report.mismatches.empty()));
    const nlohmann::json j = report;
    CHECK(j.contains("spec"));
    CHECK(j.contains("agrees"));
    CHECK(j.contains("mismatches"));
  }
}

TEST_CASE("degenerate frozen suffix behaves as a constant chain") {
  // alpha = beta = 0 beyond stage 2 freezes the observed value
  const markov::MarkovSpec spec(0.4, {0.3, 0.0, 0.0}, {0.7, 0.0, 0.0});
  const auto policy = markov::markov_optimal(spec);
  // given I_2 = 1 the last trial is surely 1: keep from stage 2 on
  CHECK(policy.decisions[1] == markov::Action::keep);
  CHECK(policy.decisions[2] == markov::Action::keep);
  CHECK(markov::conjecture_check(spec).agrees);
}

TEST_CASE("counterexample_search bookkeeping") {
  const auto violations = markov::counterexample_search(2, 0.25, 0, 1);
  // 5^3 grid specs were scanned; reports only list violations
  for (const auto& report : violations) CHECK_FALSE(report.agrees);

  CHECK_THROWS(markov::counterexample_search(7, 0.25, 0, 1));
  CHECK_THROWS(markov::counterexample_search(2, 0.0, 0, 1));

  SECTION("deterministic for fixed arguments") {
    const auto a = markov::counterexample_search(3, 0.3, 200, 42);
    const auto b = markov::counterexample_search(3, 0.3, 200, 42);
    CHECK(nlohmann::json(a).dump() == nlohmann::json(b).dump());
  }

  SECTION("independent-encoding subgrid never violates") {
    for (double p1 = 0.25; p1 < 1.0; p1 += 0.25) {
      for (double a1 = 0.25; a1 < 1.0; a1 += 0.25) {
        for (double a2 = 0.25; a2 < 1.0; a2 += 0.25) {
          const markov::MarkovSpec spec(p1, {a1, a2}, {1.0 - a1, 1.0 - a2});
          CHECK(markov::conjecture_check(spec).agrees);
        }
      }
    }
  }
}
