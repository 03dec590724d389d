#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "sqprod/errors.hpp"
#include "sqprod/sampler.hpp"

using namespace sqprod;
using namespace sqprod::sampler;

namespace {

bool exact_root(const mpz_class& x, unsigned m) {
  mpz_class r;
  return mpz_root(r.get_mpz_t(), x.get_mpz_t(), m) != 0;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(SamplerConfig::make(100000, 3, 2, 0.3, 0), ArgumentError);
  CHECK_THROWS_AS(SamplerConfig::make(100000, 4, 3, 0.3, 0), ArgumentError);
  CHECK_THROWS_AS(SamplerConfig::make(100000, 4, 1, 0.3, 0), ArgumentError);
  CHECK_THROWS_AS(SamplerConfig::make(100000, 4, 2, 0.0, 0), ArgumentError);
  CHECK_THROWS_AS(SamplerConfig::make(100000, 4, 2, 0.6, 0), ArgumentError);
  CHECK_THROWS_AS(SamplerConfig::make(1, 4, 2, 0.3, 0), ArgumentError);
  CHECK_THROWS_AS(SamplerConfig::make(200'000'000, 4, 2, 0.3, 0), ArgumentError);

  const auto c = SamplerConfig::make(100000, 4, 2, 0.3, 9);
  CHECK(c.prime_lo == 32);
  CHECK(c.smooth_bound == 2);
  CHECK(c.weight_denominator == 3);
  CHECK(SamplerConfig::make(1'000'000, 5, 3, 0.5, 0).weight_denominator == 6);
  CHECK(SamplerConfig::make(10000, 4, 2, 0.5, 0).prime_lo == 100);
}

TEST_CASE("index sets") {
  using S = std::vector<std::vector<std::uint32_t>>;
  CHECK(index_sets(4, 2) == S{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(index_sets(5, 3).size() == 10);
  CHECK(index_sets(6, 2).back() == std::vector<std::uint32_t>{5, 6});
}

TEST_CASE("component laws") {
  const Sampler s(SamplerConfig::make(1'000'000, 4, 2, 0.5, 1));
  REQUIRE(s.d_primes().size() == 11);  // primes below 10^1.5
  CHECK(s.d_primes().front() == 2);
  CHECK(s.d_primes().back() == 31);
  CHECK(s.inclusion_probability(2) == doctest::Approx(1.0 / 7.0));
  CHECK(s.p_primes().front() == 1009);
  double total = 0.0;
  for (auto p : s.p_primes()) total += s.p_probability(p);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.p_probability(1000) == 0.0);
  CHECK(s.p_probability(1013) / s.p_probability(1009) == doctest::Approx(1009.0 / 1013.0));

  const Sampler small(SamplerConfig::make(100000, 4, 2, 0.3, 1));
  REQUIRE(small.d_primes().size() == 1);
  CHECK(small.d_primes()[0] == 2);
}

TEST_CASE("draws stay in their supports") {
  const Sampler s(SamplerConfig::make(1'000'000, 4, 2, 0.5, 1));
  CounterRng rng(1, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto p = s.sample_p(rng);
    REQUIRE(std::binary_search(s.p_primes().begin(), s.p_primes().end(), p));
    const mpz_class d = s.sample_d(rng);
    mpz_class rest = d;
    for (auto q : s.d_primes()) {
      if (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
        REQUIRE_FALSE(mpz_divisible_ui_p(rest.get_mpz_t(), q));
      }
    }
    REQUIRE(rest == 1);
  }
}

TEST_CASE("assembly and event E") {
  const auto c = SamplerConfig::make(100000, 4, 2, 0.3, 0);
  // sets: 12 13 14 23 24 34
  std::vector<mpz_class> d{1, 1, 1, 1, 1, 1};
  std::vector<std::uint64_t> p{37, 41, 43, 47, 53, 59};
  auto t = assemble_tuple(c, d, p);
  CHECK(t.n[0] == 37 * 41 * 43);
  CHECK(t.n[1] == 37 * 47 * 53);
  CHECK(t.n[2] == 41 * 47 * 59);
  CHECK(t.n[3] == 43 * 53 * 59);
  CHECK(t.d_product_squarefree);
  CHECK(t.in_window == std::vector<bool>{true, true, false, false});
  CHECK_FALSE(t.event_e);

  auto u = assemble_tuple(c, {1, 1, 1, 1, 1, 1}, {37, 37, 37, 37, 37, 37});
  CHECK(u.event_e);
  auto v = assemble_tuple(c, {2, 1, 1, 1, 1, 2}, {37, 37, 37, 37, 37, 37});
  CHECK_FALSE(v.d_product_squarefree);
  CHECK_FALSE(v.event_e);
  CHECK_THROWS(assemble_tuple(c, {1}, {37}));

  const auto mags = target_magnitudes(assemble_tuple(c, {2, 1, 1, 1, 1, 1}, p), c);
  CHECK(mags == std::vector<double>{50000.0, 50000.0, 100000.0, 100000.0});
}

TEST_CASE("product of a tuple is an m-th power") {
  for (auto [k, m] : {std::pair{4u, 2u}, {5u, 3u}, {6u, 2u}}) {
    const Sampler s(SamplerConfig::make(1'000'000, k, m, 0.5, 3));
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
      CounterRng rng(3, trial);
      const auto t = s.sample_tuple(rng);
      mpz_class prod = 1;
      for (const auto& x : t.n) prod *= x;
      REQUIRE(exact_root(prod, m));
    }
  }
}

TEST_CASE("Euler identity") {
  CHECK(euler_identity_check(5, 4, 2) == std::pair{mpq_class(35, 27), mpq_class(35, 27)});
  CHECK(euler_identity_check(3, 4, 2).first == mpq_class(7, 6));
  CHECK(euler_identity_check(2, 4, 2).first == 1);
  CHECK(euler_identity_check(2, 4, 2).second == 1);
  for (std::uint32_t bound = 2; bound <= 40; ++bound) {
    const auto [lhs, rhs] = euler_identity_check(bound, 5, 3);
    REQUIRE(lhs == rhs);
  }
  CHECK_THROWS_AS(euler_identity_check(51, 4, 2), CapacityError);
}

TEST_CASE("reports are reproducible and order independent") {
  const Sampler s(SamplerConfig::make(100000, 4, 2, 0.3, 11));
  const auto a = to_json(run_monte_carlo(s, 3000)).dump();
  const auto b = to_json(run_monte_carlo(s, 3000)).dump();
  const auto c = to_json(run_monte_carlo(s, 3000, 3)).dump();
  CHECK(a == b);
  CHECK(a == c);

  std::vector<std::uint64_t> order(3000);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), std::mt19937_64(5));
  const auto shuffled = accumulate_trials(s, order).report(s.config());
  CHECK(to_json(shuffled).dump() == a);

  std::vector<std::uint64_t> lo(order.begin(), order.begin() + 1000);
  std::vector<std::uint64_t> hi(order.begin() + 1000, order.end());
  auto merged = accumulate_trials(s, hi);
  merged.merge(accumulate_trials(s, lo));
  CHECK(to_json(merged.report(s.config())).dump() == a);

  const auto one = to_json(run_monte_carlo(s, 1)).dump();
  CHECK(one == to_json(run_monte_carlo(s, 1)).dump());
}

TEST_CASE("report invariants") {
  const Sampler s(SamplerConfig::make(100000, 4, 2, 0.3, 2));
  const auto r = run_monte_carlo(s, 2000);
  CHECK(r.trials == 2000);
  CHECK(r.perfect_power_hits == r.trials);
  CHECK(r.hits_e <= r.trials);
  CHECK(r.rankin_pass <= r.trials);
  CHECK(r.max_hit_frequency >= 0.0);
  CHECK(r.max_hit_frequency <= 1.0);
  CHECK(r.omega_count == 2000 * 6);
  CHECK(r.target_magnitudes.count == 2000 * 4);
  CHECK(r.target_magnitudes.max <= 100000.0);
}

TEST_CASE("csv stream") {
  const Sampler s(SamplerConfig::make(100000, 4, 2, 0.3, 2));
  std::ostringstream csv;
  write_csv_header(csv, s.config());
  run_monte_carlo(s, 5, 1, [&](std::uint64_t trial, const TupleSample& t) {
    write_csv_row(csv, trial, t);
  });
  const auto text = csv.str();
  CHECK(text.rfind("trial,d_1_2,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.find('\r') == std::string::npos);
}
