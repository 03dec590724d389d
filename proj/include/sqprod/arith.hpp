#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sqprod::arith {

inline constexpr std::uint64_t kDefaultTableCap = 100'000'000;

// Smallest-prime-factor sieve over [0, limit]. Immutable after construction,
// so one table can be shared by concurrent readers.
class FactorTable {
 public:
  FactorTable(std::uint64_t limit, std::uint64_t cap = kDefaultTableCap);

  std::uint32_t limit() const { return limit_; }

  // Requires 2 <= n <= limit.
  std::uint32_t smallest_factor(std::uint32_t n) const;
  bool is_prime(std::uint64_t n) const;

  std::span<const std::uint32_t> primes() const { return primes_; }
  // Position of p in primes(), or nullopt when p is not a prime <= limit.
  std::optional<std::uint32_t> prime_index(std::uint64_t p) const;
  // Number of primes <= x (x clamped to the limit).
  std::uint32_t prime_count(std::uint64_t x) const;

  // (prime, exponent) pairs in increasing prime order; empty for n = 1.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint64_t n) const;

  unsigned omega(std::uint64_t n) const;      // distinct prime factors
  unsigned big_omega(std::uint64_t n) const;  // with multiplicity

 private:
  void require_in_range(std::uint64_t n) const;

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

FactorTable build_factor_table(std::uint64_t limit, std::uint64_t cap = kDefaultTableCap);

// Exponent vector of an integer reduced modulo m, keyed by prime index.
// Only nonzero residues are stored, sorted by prime index.
class ResidueVector {
 public:
  struct Entry {
    std::uint32_t prime_index;
    std::uint32_t residue;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit ResidueVector(std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }
  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::uint32_t residue_at(std::uint32_t prime_index) const;

  // Adds `amount` to the exponent at prime_index, reducing mod m.
  void add(std::uint32_t prime_index, std::uint32_t amount);
  ResidueVector& operator+=(const ResidueVector& other);

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;

 private:
  std::uint32_t modulus_;
  std::vector<Entry> entries_;
};

ResidueVector residue_vector(std::uint64_t n, std::uint32_t m, const FactorTable& table);
ResidueVector vector_sum(const ResidueVector& a, const ResidueVector& b);

// Dense m = 2 form: bit i set iff the i-th prime divides n to an odd power.
// Throws CapacityError if n has a prime factor beyond the 64th prime.
std::uint64_t kernel_mask(std::uint64_t n, const FactorTable& table);

// Product of the primes dividing n to an odd power.
std::uint64_t squarefree_kernel(std::uint64_t n, const FactorTable& table);
bool is_squarefree(std::uint64_t n, const FactorTable& table);

// Exact: x == y^m for an integer y.
bool is_perfect_power(const mpz_class& x, unsigned m);

// Floor of x^(1/m) for machine integers, exact.
std::uint64_t integer_root(std::uint64_t x, unsigned m);

// Sum of 1/p over primes lo <= p <= hi, Kahan-compensated in long double.
long double prime_harmonic_sum(std::uint64_t lo, std::uint64_t hi, const FactorTable& table);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sqprod::arith
