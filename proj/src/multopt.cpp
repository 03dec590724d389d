#include "sqprod/multopt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqprod/errors.hpp"

namespace sqprod::multopt {

int SignAssignment::value(std::uint32_t x, const arith::FactorTable& table) const {
  int f = 1;
  for (auto [p, e] : table.factorize(x)) {
    if (e % 2 == 1) f *= signs.at(p);
  }
  return f;
}

std::int64_t SignAssignment::recompute_partial_sum(const arith::FactorTable& table) const {
  std::int64_t sum = 0;
  for (std::uint32_t x = 1; x <= n; ++x) sum += value(x, table);
  return sum;
}

namespace {

// Primes are decided in decreasing order. Deciding q fixes f(x) for every x
// whose smallest prime factor is q, because all larger primes are settled.
class MinSumSearch {
 public:
  MinSumSearch(std::uint32_t n, const arith::FactorTable& table, bool prefix_large_primes)
      : n_(n), table_(table), value_(n + 1, 0), sign_(n + 1, 0) {
    value_[1] = 1;
    determined_sum_ = 1;
    undetermined_ = n - 1;
    std::vector<std::uint32_t> primes(table.primes().begin(),
                                      table.primes().begin() + table.prime_count(n));
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
      const std::uint32_t p = *it;
      if (prefix_large_primes && 2 * std::uint64_t{p} > n) {
        sign_[p] = -1;
        value_[p] = -1;
        determined_sum_ -= 1;
        --undetermined_;
      } else {
        order_.push_back(p);
      }
    }
    groups_.resize(n + 1);
    for (std::uint32_t x = 2; x <= n; ++x) {
      if (value_[x] == 0) groups_[table.smallest_factor(x)].push_back(x);
    }
  }

  MinSumResult run() {
    best_ = n_ + 1;
    descend(0);
    MinSumResult result;
    result.min_sum = best_;
    result.witness.n = n_;
    for (std::uint32_t p : table_.primes()) {
      if (p > n_) break;
      result.witness.signs[p] = best_sign_[p];
    }
    result.witness.partial_sum = best_;
    return result;
  }

 private:
  void descend(std::size_t depth) {
    // Every undetermined term can at best contribute -1.
    if (determined_sum_ - undetermined_ >= best_) return;
    if (depth == order_.size()) {
      best_ = determined_sum_;
      best_sign_ = sign_;
      return;
    }
    const std::uint32_t q = order_[depth];
    for (int s : {-1, +1}) {
      sign_[q] = s;
      std::int64_t delta = 0;
      for (std::uint32_t x : groups_[q]) {
        value_[x] = s * value_[x / q];
        delta += value_[x];
      }
      determined_sum_ += delta;
      undetermined_ -= static_cast<std::int64_t>(groups_[q].size());
      descend(depth + 1);
      undetermined_ += static_cast<std::int64_t>(groups_[q].size());
      determined_sum_ -= delta;
      for (std::uint32_t x : groups_[q]) value_[x] = 0;
    }
    sign_[q] = 0;
  }

  std::uint32_t n_;
  const arith::FactorTable& table_;
  std::vector<std::uint32_t> order_;
  std::vector<std::vector<std::uint32_t>> groups_;
  std::vector<int> value_;
  std::vector<int> sign_;
  std::vector<int> best_sign_;
  std::int64_t determined_sum_ = 0;
  std::int64_t undetermined_ = 0;
  std::int64_t best_ = 0;
};

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tolerance, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tolerance) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tolerance, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tolerance, depth - 1);
}

}  // namespace

MinSumResult min_multiplicative_sum(std::uint32_t n, const MinSumOptions& options) {
  if (n < 1) throw ArgumentError("min_multiplicative_sum requires N >= 1");
  if (n > options.max_n) {
    throw CapacityError("N=" + std::to_string(n) + " exceeds multiplicative search limit " +
                        std::to_string(options.max_n));
  }
  const arith::FactorTable table(std::max<std::uint32_t>(n, 2));
  return MinSumSearch(n, table, options.prefix_large_primes).run();
}

std::uint64_t compute_f(std::uint32_t n, const MinSumOptions& options) {
  const std::int64_t min_sum = min_multiplicative_sum(n, options).min_sum;
  return static_cast<std::uint64_t>((static_cast<std::int64_t>(n) - min_sum) / 2);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance, int max_depth) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tolerance, max_depth);
}

double hall_montgomery_constant(double tolerance) {
  const double root_e = std::sqrt(std::exp(1.0));
  const double integral = adaptive_simpson(
      [](double t) { return std::log(t) / (t + 1.0); }, 1.0, root_e, 0.5 * tolerance);
  return 1.0 - std::log1p(root_e) + 2.0 * integral;
}

double optimal_hall_exponent() { return 1.0 + std::sqrt(std::exp(1.0)); }

std::uint64_t hall_threshold(std::uint64_t n, double u) {
  const long double root = std::pow(static_cast<long double>(n), 1.0L / u);
  return static_cast<std::uint64_t>(std::floor(root + 1e-9L));
}

HallSet build_hall_set(std::uint64_t n, double u, const arith::FactorTable& table) {
  if (n < 4 || u < 2.0 || u > 4.0) {
    throw ArgumentError("Hall set requires N >= 4 and 2 <= u <= 4");
  }
  if (n > table.limit()) {
    throw CapacityError("Hall set N=" + std::to_string(n) + " exceeds factor table limit");
  }
  HallSet set{n, u, hall_threshold(n, u), {}};
  for (std::uint64_t x = 2; x <= n; ++x) {
    unsigned large = 0;
    for (auto y = static_cast<std::uint32_t>(x); y > 1 && large < 2;) {
      const std::uint32_t p = table.smallest_factor(y);
      if (p > set.threshold) ++large;
      y /= p;
    }
    if (large == 1) set.members.push_back(x);
  }
  return set;
}

bool certify_no_odd_power_products(std::span<const std::uint64_t> a, std::uint64_t threshold,
                                   const arith::FactorTable& table) {
  for (std::uint64_t x : a) {
    int f = 1;
    for (auto [p, e] : table.factorize(x)) {
      if (p > threshold && e % 2 == 1) f = -f;
    }
    if (f != -1) return false;
  }
  return true;
}

std::vector<std::uint64_t> liouville_negative_set(std::uint64_t n,
                                                  const arith::FactorTable& table) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 2; x <= n; ++x) {
    if (table.big_omega(x) % 2 == 1) out.push_back(x);
  }
  return out;
}

nlohmann::json to_json(const MinSumResult& r) {
  nlohmann::json signs = nlohmann::json::object();
  for (auto [p, s] : r.witness.signs) signs[std::to_string(p)] = s;
  const std::int64_t n = r.witness.n;
  return {{"N", n},
          {"min_sum", r.min_sum},
          {"F", (n - r.min_sum) / 2},
          {"signs", std::move(signs)}};
}

}  // namespace sqprod::multopt
