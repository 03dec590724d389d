#include "sqprod/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>

#include "sqprod/arith.hpp"
#include "sqprod/errors.hpp"

namespace sqprod::sampler {

namespace {

// n^e as a long double, snapped to the nearest integer when within 1e-9 so
// that exact integral powers compare exactly.
long double real_power(std::uint64_t n, double e) {
  const long double r = std::pow(static_cast<long double>(n), static_cast<long double>(e));
  const long double nearest = std::round(r);
  return std::abs(r - nearest) < 1e-9L ? nearest : r;
}

// Distinct prime factors of d, or 0 when d is not squarefree. Trial division
// terminates quickly for the smooth values the sampler produces.
int squarefree_omega(const mpz_class& d) {
  mpz_class rem = d;
  int omega = 0;
  for (unsigned long f = 2; mpz_class(f) * f <= rem; ++f) {
    if (mpz_divisible_ui_p(rem.get_mpz_t(), f) == 0) continue;
    mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), f);
    if (mpz_divisible_ui_p(rem.get_mpz_t(), f) != 0) return -1;
    ++omega;
  }
  return rem > 1 ? omega + 1 : omega;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

SamplerConfig SamplerConfig::make(std::uint64_t n, std::uint32_t k, std::uint32_t m, double eps,
                                  std::uint64_t seed) {
  if (m < 2 || k < 4 || k < m + 2 || k > 16) {
    throw ArgumentError("sampler requires m >= 2, 4 <= k <= 16 and k >= m + 2 (got k=" +
                        std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  if (!(eps > 0.0 && eps <= 0.5)) throw ArgumentError("sampler requires 0 < eps <= 0.5");
  if (n < 2 || n > kMaxSamplerN) {
    throw ArgumentError("sampler requires 2 <= N <= " + std::to_string(kMaxSamplerN));
  }
  SamplerConfig c;
  c.n = n;
  c.k = k;
  c.m = m;
  c.eps = eps;
  c.seed = seed;
  c.smooth_bound = static_cast<std::uint64_t>(std::floor(real_power(n, eps * eps)));
  c.prime_lo = static_cast<std::uint64_t>(std::ceil(real_power(n, eps)));
  c.weight_denominator = arith::binomial(k - 1, m - 1);
  if (c.prime_lo > n) throw ArgumentError("empty prime range [N^eps, N]");
  return c;
}

std::vector<std::vector<std::uint32_t>> index_sets(std::uint32_t k, std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current(m);
  for (std::uint32_t i = 0; i < m; ++i) current[i] = i + 1;
  while (true) {
    out.push_back(current);
    std::int64_t pos = static_cast<std::int64_t>(m) - 1;
    while (pos >= 0 && current[pos] == k - m + 1 + static_cast<std::uint32_t>(pos)) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (auto j = static_cast<std::size_t>(pos) + 1; j < m; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

Sampler::Sampler(const SamplerConfig& config)
    : config_(config), index_sets_(sampler::index_sets(config.k, config.m)) {
  const long double d_limit = real_power(config.n, config.eps * config.eps);
  for (std::uint64_t p : primes_in_range(2, static_cast<std::uint64_t>(std::ceil(d_limit)))) {
    if (static_cast<long double>(p) < d_limit) {
      d_primes_.push_back(static_cast<std::uint32_t>(p));
      d_thresholds_.push_back(inclusion_probability(p));
    }
  }
  p_primes_ = primes_in_range(config.prime_lo, config.n);
  if (p_primes_.empty()) {
    throw ArgumentError("no prime in [" + std::to_string(config.prime_lo) + ", " +
                        std::to_string(config.n) + "]");
  }
  p_cumulative_.reserve(p_primes_.size());
  long double running = 0.0L;
  for (std::uint64_t p : p_primes_) {
    running += 1.0L / p;
    p_cumulative_.push_back(static_cast<double>(running));
  }
  p_total_ = static_cast<double>(running);
}

double Sampler::inclusion_probability(std::uint64_t p) const {
  return 1.0 / (static_cast<double>(config_.weight_denominator) * static_cast<double>(p) + 1.0);
}

double Sampler::p_probability(std::uint64_t p) const {
  if (!std::binary_search(p_primes_.begin(), p_primes_.end(), p)) return 0.0;
  return (1.0 / static_cast<double>(p)) / p_total_;
}

mpz_class Sampler::sample_d(CounterRng& rng) const {
  mpz_class d = 1;
  for (std::size_t i = 0; i < d_primes_.size(); ++i) {
    if (rng.uniform() < d_thresholds_[i]) d *= d_primes_[i];
  }
  return d;
}

std::uint64_t Sampler::sample_p(CounterRng& rng) const {
  const double x = rng.uniform() * p_total_;
  auto it = std::upper_bound(p_cumulative_.begin(), p_cumulative_.end(), x);
  if (it == p_cumulative_.end()) --it;
  return p_primes_[static_cast<std::size_t>(it - p_cumulative_.begin())];
}

TupleSample Sampler::sample_tuple(CounterRng& rng) const {
  std::vector<mpz_class> d;
  std::vector<std::uint64_t> p;
  d.reserve(index_sets_.size());
  p.reserve(index_sets_.size());
  for (std::size_t s = 0; s < index_sets_.size(); ++s) {
    d.push_back(sample_d(rng));
    p.push_back(sample_p(rng));
  }
  return assemble_tuple(config_, std::move(d), std::move(p));
}

TupleSample assemble_tuple(const SamplerConfig& config, std::vector<mpz_class> d,
                           std::vector<std::uint64_t> p) {
  const auto sets = index_sets(config.k, config.m);
  if (d.size() != sets.size() || p.size() != sets.size()) {
    throw ArgumentError("expected " + std::to_string(sets.size()) + " d- and p-components");
  }
  TupleSample t;
  t.d_components = std::move(d);
  t.p_components = std::move(p);
  t.n.assign(config.k, mpz_class(1));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (std::uint32_t i : sets[s]) {
      t.n[i - 1] *= t.d_components[s];
      t.n[i - 1] *= static_cast<unsigned long>(t.p_components[s]);
    }
  }
  check_event_e(t, config);
  return t;
}

bool check_event_e(TupleSample& t, const SamplerConfig& config) {
  bool squarefree = true;
  for (std::size_t a = 0; a < t.d_components.size() && squarefree; ++a) {
    squarefree = squarefree_omega(t.d_components[a]) >= 0;
    for (std::size_t b = a + 1; b < t.d_components.size() && squarefree; ++b) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), t.d_components[a].get_mpz_t(), t.d_components[b].get_mpz_t());
      squarefree = g == 1;
    }
  }
  t.d_product_squarefree = squarefree;
  const mpz_class n(static_cast<unsigned long>(config.n));
  t.in_window.assign(t.n.size(), false);
  bool all_in = true;
  for (std::size_t i = 0; i < t.n.size(); ++i) {
    t.in_window[i] = 2 * t.n[i] >= n && t.n[i] <= n;
    all_in = all_in && t.in_window[i];
  }
  t.event_e = squarefree && all_in;
  return t.event_e;
}

std::vector<double> target_magnitudes(const TupleSample& t, const SamplerConfig& config) {
  const auto sets = index_sets(config.k, config.m);
  std::vector<mpz_class> divisors(config.k, mpz_class(1));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (std::uint32_t i : sets[s]) divisors[i - 1] *= t.d_components[s];
  }
  std::vector<double> out;
  for (const auto& d : divisors) out.push_back(static_cast<double>(config.n) / d.get_d());
  return out;
}

std::pair<mpq_class, mpq_class> euler_identity_check(std::uint32_t bound, std::uint32_t k,
                                                     std::uint32_t m) {
  if (bound > 50) throw CapacityError("Euler identity check limited to prime bound <= 50");
  if (m < 2 || k < m) throw ArgumentError("Euler identity check requires k >= m >= 2");
  const std::uint64_t w = arith::binomial(k - 1, m - 1);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : primes_in_range(2, bound)) {
    if (p < bound) primes.push_back(p);
  }
  // Left side: enumerate every squarefree d as a subset of the primes.
  mpq_class lhs = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << primes.size()); ++subset) {
    mpz_class denominator = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((subset >> i) & 1) denominator *= static_cast<unsigned long>(w * primes[i]);
    }
    lhs += mpq_class(mpz_class(1), denominator);
  }
  lhs.canonicalize();
  mpq_class rhs = 1;
  for (std::uint64_t p : primes) {
    rhs *= mpq_class(mpz_class(static_cast<unsigned long>(w * p + 1)),
                     mpz_class(static_cast<unsigned long>(w * p)));
  }
  rhs.canonicalize();
  return {lhs, rhs};
}

void MonteCarloAccumulator::add(const TupleSample& t, const SamplerConfig& config) {
  ++trials_;
  mpz_class product = 1;
  for (const auto& x : t.n) product *= x;
  if (arith::is_perfect_power(product, config.m)) ++perfect_power_hits_;

  bool collision = false;
  for (std::size_t i = 0; i < t.n.size() && !collision; ++i) {
    for (std::size_t j = i + 1; j < t.n.size() && !collision; ++j) collision = t.n[i] == t.n[j];
  }
  collisions_ += collision;

  const auto rankin_bound = static_cast<unsigned long>(
      std::floor(real_power(config.n, config.eps)));
  bool rankin = true;
  for (const auto& d : t.d_components) {
    rankin = rankin && d <= rankin_bound;
    const int omega = squarefree_omega(d);
    const auto w = static_cast<std::uint64_t>(std::max(omega, 0));
    ++omega_count_;
    omega_sum_ += w;
    omega_square_sum_ += w * w;
  }
  rankin_pass_ += rankin;

  if (t.event_e) {
    ++hits_e_;
    for (std::size_t i = 0; i < t.n.size(); ++i) {
      ++hit_values_[{static_cast<std::uint32_t>(i), t.n[i].get_ui()}];
    }
  }

  const auto sets = index_sets(config.k, config.m);
  std::vector<mpz_class> divisors(config.k, mpz_class(1));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (std::uint32_t i : sets[s]) divisors[i - 1] *= t.d_components[s];
  }
  for (const auto& d : divisors) ++divisor_histogram_[d];
}

void MonteCarloAccumulator::merge(const MonteCarloAccumulator& other) {
  trials_ += other.trials_;
  hits_e_ += other.hits_e_;
  perfect_power_hits_ += other.perfect_power_hits_;
  collisions_ += other.collisions_;
  rankin_pass_ += other.rankin_pass_;
  omega_count_ += other.omega_count_;
  omega_sum_ += other.omega_sum_;
  omega_square_sum_ += other.omega_square_sum_;
  for (const auto& [key, count] : other.hit_values_) hit_values_[key] += count;
  for (const auto& [key, count] : other.divisor_histogram_) divisor_histogram_[key] += count;
}

MonteCarloReport MonteCarloAccumulator::report(const SamplerConfig& config) const {
  MonteCarloReport r;
  r.config = config;
  r.trials = trials_;
  r.hits_e = hits_e_;
  r.perfect_power_hits = perfect_power_hits_;
  r.collisions = collisions_;
  r.rankin_pass = rankin_pass_;
  if (trials_ > 0) {
    r.p_hat_e = static_cast<double>(hits_e_) / static_cast<double>(trials_);
    r.p_hat_e_stderr = std::sqrt(r.p_hat_e * (1.0 - r.p_hat_e) / static_cast<double>(trials_));
  }
  r.omega_count = omega_count_;
  if (omega_count_ > 0) {
    const mpq_class mean(mpz_class(static_cast<unsigned long>(omega_sum_)),
                         mpz_class(static_cast<unsigned long>(omega_count_)));
    mpq_class variance(mpz_class(static_cast<unsigned long>(omega_square_sum_)),
                       mpz_class(static_cast<unsigned long>(omega_count_)));
    variance -= mean * mean;
    r.omega_mean = mean.get_d();
    r.omega_variance = variance.get_d();
  }
  r.omega_reference = std::log(std::log(static_cast<double>(config.n))) /
                      static_cast<double>(config.weight_denominator);
  if (hits_e_ > 0) {
    std::uint64_t top = 0;
    for (const auto& [key, count] : hit_values_) top = std::max(top, count);
    r.max_hit_frequency = static_cast<double>(top) / static_cast<double>(hits_e_);
  }
  if (!divisor_histogram_.empty()) {
    auto& s = r.target_magnitudes;
    const double n = static_cast<double>(config.n);
    for (const auto& [d, count] : divisor_histogram_) s.count += count;
    s.max = n / divisor_histogram_.begin()->first.get_d();
    s.min = n / divisor_histogram_.rbegin()->first.get_d();
    long double total = 0.0L;
    std::uint64_t seen = 0;
    const std::uint64_t median_rank = (s.count - 1) / 2;
    bool median_set = false;
    // Descending divisor order is ascending magnitude order.
    for (auto it = divisor_histogram_.rbegin(); it != divisor_histogram_.rend(); ++it) {
      const double value = n / it->first.get_d();
      total += static_cast<long double>(value) * it->second;
      seen += it->second;
      if (!median_set && seen > median_rank) {
        s.median = value;
        median_set = true;
      }
    }
    s.mean = static_cast<double>(total / s.count);
  }
  return r;
}

MonteCarloAccumulator accumulate_trials(const Sampler& sampler,
                                        std::span<const std::uint64_t> trial_indices,
                                        const TrialCallback& on_trial) {
  MonteCarloAccumulator acc;
  for (std::uint64_t trial : trial_indices) {
    CounterRng rng(sampler.config().seed, trial);
    const TupleSample t = sampler.sample_tuple(rng);
    acc.add(t, sampler.config());
    if (on_trial) on_trial(trial, t);
  }
  return acc;
}

MonteCarloReport run_monte_carlo(const Sampler& sampler, std::uint64_t trials, unsigned threads,
                                 const TrialCallback& on_trial) {
  if (trials < 1) throw ArgumentError("run_monte_carlo requires trials >= 1");
  std::vector<std::uint64_t> indices(trials);
  for (std::uint64_t t = 0; t < trials; ++t) indices[t] = t;
  if (threads <= 1 || on_trial) {
    return accumulate_trials(sampler, indices, on_trial).report(sampler.config());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
  std::vector<MonteCarloAccumulator> parts(threads);
  std::vector<std::thread> workers;
  const std::uint64_t block = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = std::min(trials, w * block);
    const std::uint64_t hi = std::min(trials, lo + block);
    workers.emplace_back([&, w, lo, hi] {
      parts[w] = accumulate_trials(sampler, std::span(indices).subspan(lo, hi - lo));
    });
  }
  for (auto& worker : workers) worker.join();
  MonteCarloAccumulator total;
  for (const auto& part : parts) total.merge(part);
  return total.report(sampler.config());
}

nlohmann::json to_json(const MonteCarloReport& r) {
  const auto& c = r.config;
  const auto& s = r.target_magnitudes;
  return {
      {"config",
       {{"N", c.n}, {"k", c.k}, {"m", c.m}, {"eps", c.eps}, {"seed", c.seed},
        {"smooth_bound", c.smooth_bound}, {"prime_lo", c.prime_lo},
        {"weight_denominator", c.weight_denominator}}},
      {"trials", r.trials},
      {"hits_E", r.hits_e},
      {"p_hat_E", r.p_hat_e},
      {"p_hat_E_stderr", r.p_hat_e_stderr},
      {"perfect_power_hits", r.perfect_power_hits},
      {"collisions", r.collisions},
      {"rankin_pass", r.rankin_pass},
      {"omega_stats",
       {{"count", r.omega_count}, {"mean", r.omega_mean}, {"variance", r.omega_variance},
        {"reference", r.omega_reference}}},
      {"max_hit_frequency", r.max_hit_frequency},
      {"target_magnitudes_summary",
       {{"count", s.count}, {"min", s.min}, {"max", s.max}, {"mean", s.mean},
        {"median", s.median}}},
  };
}

void write_csv_header(std::ostream& out, const SamplerConfig& config) {
  const auto sets = index_sets(config.k, config.m);
  auto label = [](const std::vector<std::uint32_t>& set) {
    std::string s;
    for (std::uint32_t i : set) s += "_" + std::to_string(i);
    return s;
  };
  out << "trial";
  for (const auto& set : sets) out << ",d" << label(set);
  for (const auto& set : sets) out << ",p" << label(set);
  for (std::uint32_t i = 1; i <= config.k; ++i) out << ",n_" << i;
  out << ",d_squarefree";
  for (std::uint32_t i = 1; i <= config.k; ++i) out << ",in_window_" << i;
  out << ",event_E\n";
}

void write_csv_row(std::ostream& out, std::uint64_t trial, const TupleSample& t) {
  out << trial;
  for (const auto& d : t.d_components) out << ',' << d.get_str();
  for (std::uint64_t p : t.p_components) out << ',' << p;
  for (const auto& n : t.n) out << ',' << n.get_str();
  out << ',' << int{t.d_product_squarefree};
  for (bool w : t.in_window) out << ',' << int{w};
  out << ',' << int{t.event_e} << '\n';
}

}  // namespace sqprod::sampler
