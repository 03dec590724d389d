#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"

namespace sqprod::exact {

inline constexpr std::uint32_t kDefaultSolverLimit = 100;
// Largest N whose primes fit the 64-bit kernel masks used for m = 2.
inline constexpr std::uint32_t kMaxSolverLimit = 312;
inline constexpr std::uint64_t kDefaultEdgeBudget = 10'000'000;

struct EnumerationOptions {
  std::uint32_t max_n = kDefaultSolverLimit;
  std::uint64_t edge_budget = kDefaultEdgeBudget;
};

// k-uniform hypergraph on {1..n} whose edges are the k-subsets multiplying
// to an m-th power. Edges are strictly increasing, sorted lexicographically
// and stored contiguously with stride k.
class BadTupleHypergraph {
 public:
  BadTupleHypergraph(std::uint32_t n, std::uint32_t k, std::uint32_t m);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t m() const { return m_; }
  std::size_t edge_count() const { return k_ == 0 ? 0 : flat_.size() / k_; }
  std::span<const std::uint32_t> edge(std::size_t i) const {
    return {flat_.data() + i * k_, k_};
  }

  // Appends an edge; it must be strictly increasing, within {1..n} and
  // lexicographically after the previous edge. Throws ArgumentError otherwise.
  void add_edge(std::span<const std::uint32_t> edge);

  friend bool operator==(const BadTupleHypergraph&, const BadTupleHypergraph&) = default;

 private:
  std::uint32_t n_, k_, m_;
  std::vector<std::uint32_t> flat_;
};

// Exhaustive enumeration. k = 1 is accepted and yields the m-th powers <= n.
BadTupleHypergraph enumerate_bad_tuples(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                                        const EnumerationOptions& options = {});

enum class Objective { kCardinality, kReciprocalSum };

struct SolverOptions {
  // Maximum number of branch-and-bound nodes; 0 means unlimited. Exceeding it
  // throws CapacityError rather than returning a non-optimal answer.
  std::uint64_t node_budget = 0;
};

struct SubsetSolution {
  std::vector<std::uint32_t> members;
  std::uint64_t cardinality = 0;
  mpq_class weight;  // sum of 1/n over members
  bool optimal = false;
  // A fully contained edge found by the post-solve re-scan; never set for a
  // correct solve.
  std::optional<std::vector<std::uint32_t>> certificate;
  std::uint64_t nodes = 0;
};

SubsetSolution max_independent_subset(const BadTupleHypergraph& h, Objective objective,
                                      const SolverOptions& options = {});

// First edge entirely contained in `members`, if any.
std::optional<std::vector<std::uint32_t>> find_violated_edge(
    const BadTupleHypergraph& h, std::span<const std::uint32_t> members);

struct ComputeOptions {
  EnumerationOptions enumeration;
  SolverOptions solver;
};

// F_{k,m}(n). k = 1 uses the closed form n - floor(n^(1/m)).
std::uint64_t compute_fk(std::uint32_t n, std::uint32_t k, std::uint32_t m = 2,
                         const ComputeOptions& options = {});

// L_k(n) for squares.
mpq_class compute_lk(std::uint32_t n, std::uint32_t k, const ComputeOptions& options = {});

// Keys are (k, n).
using FkTable = std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>;

// F_{k+l}(n) <= max(F_k(n), F_l(n) + k). Throws ArgumentError on a missing value.
bool check_mono_inequality(const FkTable& values, std::uint32_t k, std::uint32_t l,
                           std::uint32_t n);

// Number of k-subsets of {1..n} with square product; n <= 60, k <= 5.
std::uint64_t count_square_ksubsets(std::uint32_t n, std::uint32_t k);

// Class-representative closed forms for k = 2: one element per squarefree
// kernel, the kernel itself being the lightest member of its class.
std::uint64_t count_squarefree(std::uint64_t n);
mpq_class squarefree_reciprocal_sum(std::uint32_t n);

nlohmann::json to_json(const BadTupleHypergraph& h);
BadTupleHypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SubsetSolution& s);

// Always "p/q", including q = 1.
std::string rational_string(const mpq_class& q);

}  // namespace sqprod::exact
