#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sqprod/errors.hpp"
#include "sqprod/multopt.hpp"

using namespace sqprod;
using namespace sqprod::multopt;

TEST_CASE("minimum multiplicative sums") {
  CHECK(min_multiplicative_sum(1).min_sum == 1);
  CHECK(min_multiplicative_sum(8).min_sum == -2);
  CHECK(min_multiplicative_sum(19).min_sum == -5);
  CHECK(compute_f(1) == 0);
  CHECK(compute_f(8) == 5);
  CHECK(compute_f(19) == 12);
}

TEST_CASE("witness reproduces the minimum") {
  const auto table = arith::build_factor_table(200);
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const auto r = min_multiplicative_sum(n);
    REQUIRE(r.witness.n == n);
    REQUIRE(r.witness.partial_sum == r.min_sum);
    REQUIRE(r.witness.recompute_partial_sum(table) == r.min_sum);
    REQUIRE((n - r.min_sum) % 2 == 0);
  }
}

TEST_CASE("F agrees with the span oracle") {
  for (std::uint32_t n = 1; n <= 20; ++n) {
    INFO("N=" << n);
    REQUIRE(compute_f(n) == oracle::max_odd_square_free(n));
  }
}

TEST_CASE("prefix option does not change the answer") {
  MinSumOptions plain;
  plain.prefix_large_primes = false;
  for (std::uint32_t n = 1; n <= 40; ++n) {
    REQUIRE(min_multiplicative_sum(n).min_sum == min_multiplicative_sum(n, plain).min_sum);
  }
}

TEST_CASE("min sum limit") {
  CHECK_THROWS_AS(min_multiplicative_sum(121), CapacityError);
  CHECK_THROWS_AS(min_multiplicative_sum(0), ArgumentError);
}

TEST_CASE("adaptive simpson") {
  const double pi = std::acos(-1.0);
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, pi, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-11));
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 3.0, 1e-12) ==
        doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("Hall-Montgomery constant") {
  const double c = hall_montgomery_constant();
  CHECK(std::abs(c - 0.171500493141536) < 1e-10);
  CHECK(std::abs((1.0 - c) - 0.828499506858464) < 1e-10);
  CHECK(std::abs(hall_montgomery_constant(1e-3) - hall_montgomery_constant(1e-9)) < 1e-3);
  CHECK(optimal_hall_exponent() == doctest::Approx(1.0 + std::sqrt(std::exp(1.0))));
}

TEST_CASE("Hall sets") {
  const auto table = arith::build_factor_table(10000);
  const double u = optimal_hall_exponent();
  CHECK(hall_threshold(10000, u) == 32);
  CHECK(hall_threshold(1'000'000, u) == 184);
  const auto set = build_hall_set(10000, u, table);
  CHECK(set.threshold == 32);
  // Brute-force membership: exactly one prime factor (with multiplicity) above the threshold.
  std::size_t expected = 0;
  for (std::uint64_t x = 1; x <= 10000; ++x) {
    unsigned big = 0;
    std::uint64_t y = x;
    for (std::uint64_t p = 2; p * p <= y; ++p) {
      while (y % p == 0) {
        big += p > 32 ? 1 : 0;
        y /= p;
      }
    }
    if (y > 1 && y > 32) ++big;
    expected += big == 1 ? 1 : 0;
  }
  CHECK(set.members.size() == expected);
  CHECK(certify_no_odd_power_products(set.members, set.threshold, table));
  CHECK_THROWS_AS(build_hall_set(3, u, table), ArgumentError);
  CHECK_THROWS_AS(build_hall_set(100, 5.0, table), ArgumentError);
}

TEST_CASE("certificate rejects a set with a square sub-product") {
  const auto table = arith::build_factor_table(100);
  const std::vector<std::uint64_t> a{2, 3, 6};
  CHECK_FALSE(certify_no_odd_power_products(a, 1, table));
}

TEST_CASE("certificate soundness against exhaustive odd subsets") {
  const auto table = arith::build_factor_table(200);
  std::mt19937_64 rng(17);
  int certified = 0;
  for (int round = 0; round < 300; ++round) {
    const std::uint64_t threshold = 1 + rng() % 20;
    // Mostly elements with an odd number of large prime factors, plus noise.
    std::vector<std::uint64_t> a;
    for (std::uint64_t x = 2; x <= 200 && a.size() < 14; ++x) {
      unsigned large = 0;
      for (auto [p, e] : table.factorize(x)) large += p > threshold ? e : 0;
      if (rng() % (large % 2 == 1 ? 4 : 60) == 0) a.push_back(x);
    }
    if (!certify_no_odd_power_products(a, threshold, table)) continue;
    ++certified;
    for (std::uint32_t mask = 1; mask < (1u << a.size()); ++mask) {
      if (std::popcount(mask) % 2 == 0) continue;
      mpz_class prod = 1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask >> i & 1) prod *= static_cast<unsigned long>(a[i]);
      }
      REQUIRE_FALSE(mpz_perfect_square_p(prod.get_mpz_t()));
    }
  }
  CHECK(certified > 50);
}

TEST_CASE("Liouville set has no odd square sub-product") {
  const auto table = arith::build_factor_table(1000);
  const auto set = liouville_negative_set(1000, table);
  CHECK(set.front() == 2);
  CHECK(certify_no_odd_power_products(set, 1, table));
}

TEST_CASE("json output") {
  const auto j = to_json(min_multiplicative_sum(8));
  CHECK(j["N"] == 8);
  CHECK(j["min_sum"] == -2);
  CHECK(j["F"] == 5);
  CHECK(j["signs"].size() == 4);
}
