#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "json.hpp"
#include "sqprod/arith.hpp"

namespace sqprod::multopt {

inline constexpr std::uint32_t kDefaultMinSumLimit = 120;

// Signs f(p) on the primes <= n of a completely multiplicative f: N -> {-1, +1}.
struct SignAssignment {
  std::uint32_t n = 0;
  std::map<std::uint32_t, int> signs;
  std::int64_t partial_sum = 0;

  // f(x) for 1 <= x <= n; f(1) = 1.
  int value(std::uint32_t x, const arith::FactorTable& table) const;
  // sum_{x <= n} f(x), recomputed from the signs.
  std::int64_t recompute_partial_sum(const arith::FactorTable& table) const;
};

struct MinSumOptions {
  std::uint32_t max_n = kDefaultMinSumLimit;
  // Fix f(p) = -1 for primes in (n/2, n]; each such prime touches only f(p).
  bool prefix_large_primes = true;
};

struct MinSumResult {
  std::int64_t min_sum = 0;
  SignAssignment witness;
};

// Exact minimum of sum_{x <= n} f(x) over completely multiplicative +-1 functions.
MinSumResult min_multiplicative_sum(std::uint32_t n, const MinSumOptions& options = {});

// F(n) = (n - min_sum) / 2.
std::uint64_t compute_f(std::uint32_t n, const MinSumOptions& options = {});

// Adaptive Simpson with the classic |S2 - S1| <= 15 * tol acceptance test and
// Richardson correction; `tolerance` is an absolute error budget.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance, int max_depth = 50);

// c = 1 - log(1 + sqrt(e)) + 2 * int_1^sqrt(e) log(t) / (t + 1) dt.
double hall_montgomery_constant(double tolerance = 1e-12);

struct HallSet {
  std::uint64_t n = 0;
  double u = 0.0;
  std::uint64_t threshold = 0;
  std::vector<std::uint64_t> members;
};

double optimal_hall_exponent();  // 1 + sqrt(e)

// floor(n^(1/u)), nudged so that integral roots are exact.
std::uint64_t hall_threshold(std::uint64_t n, double u);

// Members are the x <= n with exactly one prime factor, counted with
// multiplicity, above floor(n^(1/u)). Requires n >= 4, 2 <= u <= 4 and
// n <= table.limit().
HallSet build_hall_set(std::uint64_t n, double u, const arith::FactorTable& table);

// True iff f(p) = -1 for p > threshold, +1 otherwise, is -1 on every member of a.
bool certify_no_odd_power_products(std::span<const std::uint64_t> a, std::uint64_t threshold,
                                   const arith::FactorTable& table);

// {x <= n : lambda(x) = -1}, lambda the Liouville function.
std::vector<std::uint64_t> liouville_negative_set(std::uint64_t n,
                                                  const arith::FactorTable& table);

nlohmann::json to_json(const MinSumResult& r);

}  // namespace sqprod::multopt
