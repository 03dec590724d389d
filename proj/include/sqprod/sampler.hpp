#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sqprod/rng.hpp"

namespace sqprod::sampler {

inline constexpr std::uint64_t kMaxSamplerN = 100'000'000;

struct SamplerConfig {
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 2;
  double eps = 0.0;
  std::uint64_t seed = 0;

  // Derived by make().
  std::uint64_t smooth_bound = 0;        // floor(N^(eps^2))
  std::uint64_t prime_lo = 0;            // ceil(N^eps)
  std::uint64_t weight_denominator = 0;  // binom(k-1, m-1)

  // Validates k >= 4, k >= m + 2, m >= 2, 0 < eps <= 0.5, 2 <= N <= 1e8 and a
  // nonempty prime range [prime_lo, N]; throws ArgumentError otherwise.
  static SamplerConfig make(std::uint64_t n, std::uint32_t k, std::uint32_t m, double eps,
                            std::uint64_t seed);
};

// The m-subsets {i_1 < ... < i_m} of {1..k} in lexicographic order. Component
// vectors in TupleSample are aligned with this list.
std::vector<std::vector<std::uint32_t>> index_sets(std::uint32_t k, std::uint32_t m);

struct TupleSample {
  std::vector<mpz_class> d_components;
  std::vector<std::uint64_t> p_components;
  std::vector<mpz_class> n;  // n_1..n_k
  bool d_product_squarefree = false;
  std::vector<bool> in_window;
  bool event_e = false;
};

// Immutable precomputed laws for one configuration.
class Sampler {
 public:
  explicit Sampler(const SamplerConfig& config);

  const SamplerConfig& config() const { return config_; }
  const std::vector<std::vector<std::uint32_t>>& index_sets() const { return index_sets_; }

  // Primes below N^(eps^2), each entering d independently.
  std::span<const std::uint32_t> d_primes() const { return d_primes_; }
  double inclusion_probability(std::uint64_t p) const;  // 1 / (w p + 1)

  std::span<const std::uint64_t> p_primes() const { return p_primes_; }
  double p_probability(std::uint64_t p) const;  // (1/p) / sum(1/p')

  mpz_class sample_d(CounterRng& rng) const;
  std::uint64_t sample_p(CounterRng& rng) const;
  TupleSample sample_tuple(CounterRng& rng) const;

 private:
  SamplerConfig config_;
  std::vector<std::vector<std::uint32_t>> index_sets_;
  std::vector<std::uint32_t> d_primes_;
  std::vector<double> d_thresholds_;
  std::vector<std::uint64_t> p_primes_;
  std::vector<double> p_cumulative_;
  double p_total_ = 0.0;
};

// Builds n_i as the product of d and p over the index sets containing i, then
// sets all flags. Component vectors must have binom(k, m) entries.
TupleSample assemble_tuple(const SamplerConfig& config, std::vector<mpz_class> d,
                           std::vector<std::uint64_t> p);

// Recomputes d_product_squarefree, in_window and event_e; returns event_e.
bool check_event_e(TupleSample& t, const SamplerConfig& config);

// N_i = N / prod of the d-components whose index set contains i.
std::vector<double> target_magnitudes(const TupleSample& t, const SamplerConfig& config);

// Sum over squarefree d with prime factors < bound of 1/(w^omega(d) d), and the
// Euler product prod_{p < bound} (1 + 1/(w p)), w = binom(k-1, m-1). bound <= 50.
std::pair<mpq_class, mpq_class> euler_identity_check(std::uint32_t bound, std::uint32_t k,
                                                     std::uint32_t m);

struct SummaryStats {
  std::uint64_t count = 0;
  double min = 0.0, max = 0.0, mean = 0.0, median = 0.0;
};

struct MonteCarloReport {
  SamplerConfig config;
  std::uint64_t trials = 0;
  std::uint64_t hits_e = 0;
  double p_hat_e = 0.0;
  double p_hat_e_stderr = 0.0;
  std::uint64_t perfect_power_hits = 0;  // product of the n_i is an m-th power
  std::uint64_t collisions = 0;          // trials with n_i = n_j for some i < j
  std::uint64_t rankin_pass = 0;         // trials with every d-component <= N^eps
  std::uint64_t omega_count = 0;
  double omega_mean = 0.0;
  double omega_variance = 0.0;
  double omega_reference = 0.0;  // log log N / w
  double max_hit_frequency = 0.0;
  SummaryStats target_magnitudes;
};

// Order-independent aggregation: every statistic is a sum or a histogram, so
// merge() is commutative and associative.
class MonteCarloAccumulator {
 public:
  void add(const TupleSample& t, const SamplerConfig& config);
  void merge(const MonteCarloAccumulator& other);
  MonteCarloReport report(const SamplerConfig& config) const;

 private:
  std::uint64_t trials_ = 0, hits_e_ = 0, perfect_power_hits_ = 0;
  std::uint64_t collisions_ = 0, rankin_pass_ = 0;
  std::uint64_t omega_count_ = 0, omega_sum_ = 0, omega_square_sum_ = 0;
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> hit_values_;
  std::map<mpz_class, std::uint64_t> divisor_histogram_;  // prod of d over sets containing i
};

using TrialCallback = std::function<void(std::uint64_t trial, const TupleSample&)>;

// Trial t draws from CounterRng(seed, t).
MonteCarloAccumulator accumulate_trials(const Sampler& sampler,
                                        std::span<const std::uint64_t> trial_indices,
                                        const TrialCallback& on_trial = {});

// Runs trials 0..trials-1. With threads > 1 the trial range is split into
// contiguous blocks; the report is identical to the single-threaded one.
// A callback forces single-threaded execution in trial order.
MonteCarloReport run_monte_carlo(const Sampler& sampler, std::uint64_t trials,
                                 unsigned threads = 1, const TrialCallback& on_trial = {});

nlohmann::json to_json(const MonteCarloReport& r);

void write_csv_header(std::ostream& out, const SamplerConfig& config);
void write_csv_row(std::ostream& out, std::uint64_t trial, const TupleSample& t);

}  // namespace sqprod::sampler
