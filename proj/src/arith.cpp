#include "sqprod/arith.hpp"

#include <algorithm>
#include <string>

#include "sqprod/errors.hpp"

namespace sqprod::arith {

FactorTable::FactorTable(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 2 || limit > cap) {
    throw CapacityError("factor table limit " + std::to_string(limit) + " outside [2, " +
                        std::to_string(cap) + "]");
  }
  limit_ = static_cast<std::uint32_t>(limit);
  spf_.assign(limit_ + 1, 0);
  // Linear sieve: every composite is struck exactly once, by its smallest prime.
  for (std::uint32_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t composite = std::uint64_t{p} * i;
      if (p > spf_[i] || composite > limit_) break;
      spf_[composite] = p;
    }
  }
}

void FactorTable::require_in_range(std::uint64_t n) const {
  if (n > limit_) {
    throw CapacityError(std::to_string(n) + " exceeds factor table limit " +
                        std::to_string(limit_));
  }
}

std::uint32_t FactorTable::smallest_factor(std::uint32_t n) const {
  require_in_range(n);
  return spf_[n];
}

bool FactorTable::is_prime(std::uint64_t n) const {
  require_in_range(n);
  return n >= 2 && spf_[n] == n;
}

std::optional<std::uint32_t> FactorTable::prime_index(std::uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  return static_cast<std::uint32_t>(it - primes_.begin());
}

std::uint32_t FactorTable::prime_count(std::uint64_t x) const {
  return static_cast<std::uint32_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FactorTable::factorize(
    std::uint64_t n) const {
  require_in_range(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  auto x = static_cast<std::uint32_t>(n);
  while (x > 1) {
    const std::uint32_t p = spf_[x];
    std::uint32_t e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

unsigned FactorTable::omega(std::uint64_t n) const {
  return static_cast<unsigned>(factorize(n).size());
}

unsigned FactorTable::big_omega(std::uint64_t n) const {
  require_in_range(n);
  unsigned count = 0;
  for (auto x = static_cast<std::uint32_t>(n); x > 1; x /= spf_[x]) ++count;
  return count;
}

FactorTable build_factor_table(std::uint64_t limit, std::uint64_t cap) {
  return FactorTable(limit, cap);
}

ResidueVector::ResidueVector(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw ArgumentError("residue modulus must be >= 2");
}

std::uint32_t ResidueVector::residue_at(std::uint32_t prime_index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), prime_index,
                             [](const Entry& e, std::uint32_t i) { return e.prime_index < i; });
  return (it != entries_.end() && it->prime_index == prime_index) ? it->residue : 0;
}

void ResidueVector::add(std::uint32_t prime_index, std::uint32_t amount) {
  amount %= modulus_;
  if (amount == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), prime_index,
                             [](const Entry& e, std::uint32_t i) { return e.prime_index < i; });
  if (it != entries_.end() && it->prime_index == prime_index) {
    it->residue = (it->residue + amount) % modulus_;
    if (it->residue == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{prime_index, amount});
  }
}

ResidueVector& ResidueVector::operator+=(const ResidueVector& other) {
  if (other.modulus_ != modulus_) {
    throw ArgumentError("residue vector modulus mismatch: " + std::to_string(modulus_) +
                        " vs " + std::to_string(other.modulus_));
  }
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->prime_index < b->prime_index)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->prime_index < a->prime_index) {
      merged.push_back(*b++);
    } else {
      const std::uint32_t r = (a->residue + b->residue) % modulus_;
      if (r != 0) merged.push_back(Entry{a->prime_index, r});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

ResidueVector residue_vector(std::uint64_t n, std::uint32_t m, const FactorTable& table) {
  if (n < 1) throw ArgumentError("residue_vector requires n >= 1");
  ResidueVector v(m);
  for (auto [p, e] : table.factorize(n)) v.add(*table.prime_index(p), e);
  return v;
}

ResidueVector vector_sum(const ResidueVector& a, const ResidueVector& b) {
  ResidueVector out = a;
  out += b;
  return out;
}

std::uint64_t kernel_mask(std::uint64_t n, const FactorTable& table) {
  std::uint64_t mask = 0;
  for (auto [p, e] : table.factorize(n)) {
    if (e % 2 == 0) continue;
    const std::uint32_t idx = *table.prime_index(p);
    if (idx >= 64) {
      throw CapacityError("kernel of " + std::to_string(n) + " needs prime " + std::to_string(p) +
                          " beyond the 64-prime mask");
    }
    mask |= std::uint64_t{1} << idx;
  }
  return mask;
}

std::uint64_t squarefree_kernel(std::uint64_t n, const FactorTable& table) {
  std::uint64_t k = 1;
  for (auto [p, e] : table.factorize(n)) {
    if (e % 2 == 1) k *= p;
  }
  return k;
}

bool is_squarefree(std::uint64_t n, const FactorTable& table) {
  for (auto [p, e] : table.factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

bool is_perfect_power(const mpz_class& x, unsigned m) {
  if (m < 2) throw ArgumentError("perfect power exponent must be >= 2");
  if (x < 1) throw ArgumentError("perfect power test requires x >= 1");
  mpz_class root;
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), m) != 0;
}

std::uint64_t integer_root(std::uint64_t x, unsigned m) {
  if (m == 0) throw ArgumentError("integer_root exponent must be >= 1");
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpz_class root;
  mpz_root(root.get_mpz_t(), mpz_class(static_cast<unsigned long>(x)).get_mpz_t(), m);
  return root.get_ui();
}

long double prime_harmonic_sum(std::uint64_t lo, std::uint64_t hi, const FactorTable& table) {
  if (lo > hi) return 0.0L;
  if (hi > table.limit()) {
    throw CapacityError("prime_harmonic_sum upper bound " + std::to_string(hi) +
                        " exceeds factor table limit " + std::to_string(table.limit()));
  }
  long double sum = 0.0L;
  long double carry = 0.0L;
  auto primes = table.primes();
  for (auto it = std::lower_bound(primes.begin(), primes.end(), lo);
       it != primes.end() && *it <= hi; ++it) {
    const long double y = 1.0L / *it - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace sqprod::arith
