#include "sqprod/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqprod/arith.hpp"
#include "sqprod/errors.hpp"

namespace sqprod::exact {

namespace {

constexpr std::uint32_t kMaxK = 7;

// Residue keys: m = 2 packs the kernel into a 64-bit mask, larger m keeps a
// dense exponent vector over the primes <= n.
struct MaskOps {
  using Key = std::uint64_t;
  Key zero() const { return 0; }
  Key add(Key a, Key b) const { return a ^ b; }
  Key negate(Key a) const { return a; }
};

struct DenseOps {
  using Key = std::vector<std::uint8_t>;
  std::uint32_t m;
  std::size_t width;
  Key zero() const { return Key(width, 0); }
  Key add(const Key& a, const Key& b) const {
    Key out(width);
    for (std::size_t i = 0; i < width; ++i) out[i] = static_cast<std::uint8_t>((a[i] + b[i]) % m);
    return out;
  }
  Key negate(const Key& a) const {
    Key out(width);
    for (std::size_t i = 0; i < width; ++i) out[i] = static_cast<std::uint8_t>((m - a[i]) % m);
    return out;
  }
};

std::vector<std::uint8_t> dense_residues(std::uint32_t x, std::uint32_t m, std::size_t width,
                                         const arith::FactorTable& table) {
  std::vector<std::uint8_t> key(width, 0);
  const auto residues = arith::residue_vector(x, m, table);
  for (const auto& e : residues.entries()) {
    key[e.prime_index] = static_cast<std::uint8_t>(e.residue);
  }
  return key;
}

// Drops elements that own a prime nobody else carries: the residue at that
// prime can never cancel, so the element lies on no edge. Repeats to a fixpoint.
std::vector<std::uint32_t> live_elements(
    std::uint32_t n, const std::vector<std::vector<std::uint8_t>>& residues) {
  std::vector<bool> live(n + 1, true);
  live[0] = false;
  const std::size_t width = residues.empty() ? 0 : residues[1].size();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> carriers(width, 0);
    for (std::uint32_t x = 1; x <= n; ++x) {
      if (!live[x]) continue;
      for (std::size_t i = 0; i < width; ++i) carriers[i] += residues[x][i] != 0;
    }
    for (std::uint32_t x = 1; x <= n; ++x) {
      if (!live[x]) continue;
      for (std::size_t i = 0; i < width; ++i) {
        if (residues[x][i] != 0 && carriers[i] == 1) {
          live[x] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 1; x <= n; ++x) {
    if (live[x]) out.push_back(x);
  }
  return out;
}

template <class Ops>
class TupleEnumerator {
 public:
  using Key = typename Ops::Key;

  TupleEnumerator(Ops ops, std::vector<std::uint32_t> elements, std::vector<Key> keys,
                  BadTupleHypergraph& out, std::uint64_t budget)
      : ops_(std::move(ops)), elements_(std::move(elements)), keys_(std::move(keys)),
        out_(out), budget_(budget), k_(out.k()) {
    for (std::size_t i = 0; i < elements_.size(); ++i) buckets_[keys_[i]].push_back(i);
    chosen_.resize(k_);
  }

  void run() { descend(0, 0, ops_.zero()); }

 private:
  void descend(std::uint32_t depth, std::size_t start, const Key& partial) {
    if (depth + 1 == k_) {
      // The last element is determined by the partial sum.
      auto it = buckets_.find(ops_.negate(partial));
      if (it == buckets_.end()) return;
      const auto& bucket = it->second;
      for (auto pos = std::lower_bound(bucket.begin(), bucket.end(), start); pos != bucket.end();
           ++pos) {
        chosen_[depth] = elements_[*pos];
        emit();
      }
      return;
    }
    const std::size_t remaining = k_ - depth;
    for (std::size_t i = start; i + remaining <= elements_.size(); ++i) {
      chosen_[depth] = elements_[i];
      descend(depth + 1, i + 1, ops_.add(partial, keys_[i]));
    }
  }

  void emit() {
    if (out_.edge_count() >= budget_) {
      throw CapacityError("edge budget " + std::to_string(budget_) + " exceeded for N=" +
                          std::to_string(out_.n()) + ", k=" + std::to_string(out_.k()) +
                          ", m=" + std::to_string(out_.m()));
    }
    out_.add_edge(chosen_);
  }

  Ops ops_;
  std::vector<std::uint32_t> elements_;
  std::vector<Key> keys_;
  std::map<Key, std::vector<std::size_t>> buckets_;
  BadTupleHypergraph& out_;
  std::uint64_t budget_;
  std::uint32_t k_;
  std::vector<std::uint32_t> chosen_;
};

void validate_instance(std::uint32_t n, std::uint32_t k, std::uint32_t m, std::uint32_t max_n) {
  if (max_n > kMaxSolverLimit) {
    throw ArgumentError("solver limit " + std::to_string(max_n) + " exceeds hard maximum " +
                        std::to_string(kMaxSolverLimit));
  }
  if (n < 1 || k < 1 || k > kMaxK || m < 2) {
    throw ArgumentError("instance requires N >= 1, 1 <= k <= 7, m >= 2 (got N=" +
                        std::to_string(n) + ", k=" + std::to_string(k) +
                        ", m=" + std::to_string(m) + ")");
  }
  if (n > max_n) {
    throw CapacityError("N=" + std::to_string(n) + " exceeds solver limit " +
                        std::to_string(max_n));
  }
}

// ---------------------------------------------------------------------------
// Branch and bound for the maximum-weight subset hitting no edge completely.

template <class W>
class BranchAndBound {
 public:
  BranchAndBound(std::vector<W> weights, std::vector<std::uint32_t> flat_edges, std::uint32_t k,
                 std::uint64_t node_budget, std::uint64_t& nodes)
      : k_(k), weights_(std::move(weights)), flat_(std::move(flat_edges)),
        node_budget_(node_budget), nodes_(nodes) {
    const std::size_t n = weights_.size();
    const std::size_t edges = flat_.size() / k_;
    status_.assign(n, kUndecided);
    incident_.resize(n);
    alive_degree_.assign(n, 0);
    edge_in_.assign(edges, 0);
    edge_out_.assign(edges, 0);
    for (std::size_t e = 0; e < edges; ++e) {
      for (std::uint32_t j = 0; j < k_; ++j) {
        const std::uint32_t v = flat_[e * k_ + j];
        incident_[v].push_back(static_cast<std::uint32_t>(e));
        ++alive_degree_[v];
      }
    }
    undecided_weight_ = W(0);
    for (const W& w : weights_) undecided_weight_ += w;
    included_weight_ = W(0);
    if (k_ == 2) {
      const std::size_t words = (n + 63) / 64;
      adjacency_.assign(n, std::vector<std::uint64_t>(words, 0));
      for (std::size_t e = 0; e < edges; ++e) {
        const std::uint32_t a = flat_[2 * e], b = flat_[2 * e + 1];
        adjacency_[a][b / 64] |= std::uint64_t{1} << (b % 64);
        adjacency_[b][a / 64] |= std::uint64_t{1} << (a % 64);
      }
      by_weight_.resize(n);
      std::iota(by_weight_.begin(), by_weight_.end(), 0u);
      std::stable_sort(by_weight_.begin(), by_weight_.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return weights_[b] < weights_[a]; });
    }
  }

  // Local indices of an optimal subset.
  std::vector<std::uint32_t> solve() {
    best_value_ = W(-1);
    if (k_ == 1) {
      // Singleton edges exclude their element outright.
      for (std::size_t e = 0; e < flat_.size(); ++e) {
        if (status_[flat_[e]] == kUndecided) set_out(flat_[e]);
      }
    }
    search();
    return best_members_;
  }

 private:
  enum Status : std::uint8_t { kUndecided, kIn, kOut };

  void count_node() {
    ++nodes_;
    if (node_budget_ != 0 && nodes_ > node_budget_) {
      throw CapacityError("node budget " + std::to_string(node_budget_) + " exceeded");
    }
  }

  void set_out(std::uint32_t v) {
    status_[v] = kOut;
    undecided_weight_ -= weights_[v];
    for (std::uint32_t e : incident_[v]) {
      if (edge_out_[e]++ == 0) {
        for (std::uint32_t j = 0; j < k_; ++j) --alive_degree_[flat_[e * k_ + j]];
      }
    }
  }

  void unset_out(std::uint32_t v) {
    for (std::uint32_t e : incident_[v]) {
      if (--edge_out_[e] == 0) {
        for (std::uint32_t j = 0; j < k_; ++j) ++alive_degree_[flat_[e * k_ + j]];
      }
    }
    undecided_weight_ += weights_[v];
    status_[v] = kUndecided;
  }

  // Includes v and excludes every element left as the sole undecided member of
  // an alive edge whose other k-1 members are now included. Returns the number
  // of forced exclusions pushed onto the trail.
  std::size_t set_in(std::uint32_t v) {
    status_[v] = kIn;
    undecided_weight_ -= weights_[v];
    included_weight_ += weights_[v];
    std::size_t forced = 0;
    for (std::uint32_t e : incident_[v]) {
      if (++edge_in_[e] != k_ - 1 || edge_out_[e] != 0) continue;
      for (std::uint32_t j = 0; j < k_; ++j) {
        const std::uint32_t u = flat_[e * k_ + j];
        if (status_[u] == kUndecided) {
          set_out(u);
          trail_.push_back(u);
          ++forced;
        }
      }
    }
    return forced;
  }

  void unset_in(std::uint32_t v, std::size_t forced) {
    for (; forced > 0; --forced) {
      unset_out(trail_.back());
      trail_.pop_back();
    }
    for (std::uint32_t e : incident_[v]) --edge_in_[e];
    included_weight_ -= weights_[v];
    undecided_weight_ += weights_[v];
    status_[v] = kUndecided;
  }

  // Each alive edge needs one of its undecided members excluded. A greedy
  // family of alive edges with disjoint undecided parts therefore forces at
  // least the sum of their lightest undecided weights out.
  W matching_exclusion() {
    used_.assign(status_.size(), 0);
    W total(0);
    const std::size_t edges = edge_in_.size();
    // Edges with fewer undecided members first: they conflict with fewer others.
    for (std::uint32_t open = 2; open <= k_; ++open) {
      for (std::size_t e = 0; e < edges; ++e) {
        if (edge_out_[e] != 0 || k_ - edge_in_[e] != open) continue;
        const std::uint32_t* members = &flat_[e * k_];
        bool disjoint = true;
        for (std::uint32_t j = 0; j < k_ && disjoint; ++j) {
          disjoint = status_[members[j]] != kUndecided || !used_[members[j]];
        }
        if (!disjoint) continue;
        const W* lightest = nullptr;
        for (std::uint32_t j = 0; j < k_; ++j) {
          const std::uint32_t u = members[j];
          if (status_[u] != kUndecided) continue;
          used_[u] = 1;
          if (lightest == nullptr || weights_[u] < *lightest) lightest = &weights_[u];
        }
        total += *lightest;
      }
    }
    return total;
  }

  // k = 2 only: a greedy clique partition of the undecided, still-constrained
  // vertices. At most one vertex per clique survives, so everything but each
  // clique's heaviest member is excluded.
  W clique_exclusion() {
    W total(0);
    const std::size_t words = adjacency_.empty() ? 0 : adjacency_[0].size();
    std::vector<std::vector<std::uint64_t>> cliques;
    for (std::uint32_t v : by_weight_) {
      if (status_[v] != kUndecided || alive_degree_[v] == 0) continue;
      bool placed = false;
      for (auto& clique : cliques) {
        bool fits = true;
        for (std::size_t w = 0; w < words && fits; ++w) {
          fits = (clique[w] & adjacency_[v][w]) == clique[w];
        }
        if (fits) {
          clique[v / 64] |= std::uint64_t{1} << (v % 64);
          total += weights_[v];  // heavier member already leads this clique
          placed = true;
          break;
        }
      }
      if (!placed) {
        cliques.emplace_back(words, 0);
        cliques.back()[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
    return total;
  }

  void search() {
    count_node();
    W exclusion = matching_exclusion();
    if (k_ == 2) {
      W cliques = clique_exclusion();
      if (exclusion < cliques) exclusion = cliques;
    }
    if (included_weight_ + undecided_weight_ - exclusion <= best_value_) return;

    std::int64_t branch = -1;
    std::uint32_t best_degree = 0;
    for (std::size_t v = 0; v < status_.size(); ++v) {
      if (status_[v] == kUndecided && alive_degree_[v] > best_degree) {
        best_degree = alive_degree_[v];
        branch = static_cast<std::int64_t>(v);
      }
    }
    if (branch < 0) {
      // Every undecided element is unconstrained: take them all.
      best_value_ = included_weight_ + undecided_weight_;
      best_members_.clear();
      for (std::size_t v = 0; v < status_.size(); ++v) {
        if (status_[v] != kOut) best_members_.push_back(static_cast<std::uint32_t>(v));
      }
      return;
    }
    const auto v = static_cast<std::uint32_t>(branch);
    set_out(v);
    search();
    unset_out(v);

    const std::size_t forced = set_in(v);
    search();
    unset_in(v, forced);
  }

  std::uint32_t k_;
  std::vector<W> weights_;
  std::vector<std::uint32_t> flat_;
  std::uint64_t node_budget_;
  std::uint64_t& nodes_;

  std::vector<std::uint8_t> status_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> alive_degree_;
  std::vector<std::uint32_t> edge_in_, edge_out_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint8_t> used_;
  std::vector<std::vector<std::uint64_t>> adjacency_;
  std::vector<std::uint32_t> by_weight_;
  W undecided_weight_, included_weight_;
  W best_value_;
  std::vector<std::uint32_t> best_members_;
};

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

template <class W>
std::vector<std::uint32_t> solve_by_components(const BadTupleHypergraph& h,
                                               const std::vector<W>& weight_of,
                                               const SolverOptions& options,
                                               std::uint64_t& nodes) {
  const std::uint32_t n = h.n();
  const std::uint32_t k = h.k();
  std::vector<std::uint32_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  std::vector<bool> constrained(n + 1, false);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    auto edge = h.edge(e);
    for (std::uint32_t x : edge) constrained[x] = true;
    for (std::uint32_t j = 1; j < k; ++j) {
      parent[find_root(parent, edge[j])] = find_root(parent, edge[0]);
    }
  }

  std::vector<std::uint32_t> members;
  std::map<std::uint32_t, std::vector<std::uint32_t>> components;  // root -> sorted labels
  for (std::uint32_t x = 1; x <= n; ++x) {
    if (!constrained[x]) {
      members.push_back(x);
    } else {
      components[find_root(parent, x)].push_back(x);
    }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> component_edges;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    auto edge = h.edge(e);
    auto& flat = component_edges[find_root(parent, edge[0])];
    flat.insert(flat.end(), edge.begin(), edge.end());
  }
  for (auto& [root, labels] : components) {
    std::vector<std::uint32_t> local(n + 1, 0);
    std::vector<W> weights;
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
      local[labels[i]] = i;
      weights.push_back(weight_of[labels[i]]);
    }
    std::vector<std::uint32_t> flat = component_edges[root];
    for (auto& x : flat) x = local[x];
    BranchAndBound<W> bnb(std::move(weights), std::move(flat), k, options.node_budget, nodes);
    for (std::uint32_t i : bnb.solve()) members.push_back(labels[i]);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

BadTupleHypergraph::BadTupleHypergraph(std::uint32_t n, std::uint32_t k, std::uint32_t m)
    : n_(n), k_(k), m_(m) {
  if (k < 1 || m < 2) throw ArgumentError("hypergraph requires k >= 1 and m >= 2");
}

void BadTupleHypergraph::add_edge(std::span<const std::uint32_t> edge) {
  if (edge.size() != k_) throw ArgumentError("edge size differs from k");
  for (std::size_t j = 0; j < edge.size(); ++j) {
    if (edge[j] < 1 || edge[j] > n_ || (j > 0 && edge[j - 1] >= edge[j])) {
      throw ArgumentError("edge elements must be strictly increasing within 1..N");
    }
  }
  if (edge_count() > 0) {
    auto last = this->edge(edge_count() - 1);
    if (!std::lexicographical_compare(last.begin(), last.end(), edge.begin(), edge.end())) {
      throw ArgumentError("edges must be lexicographically increasing and distinct");
    }
  }
  flat_.insert(flat_.end(), edge.begin(), edge.end());
}

BadTupleHypergraph enumerate_bad_tuples(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                                        const EnumerationOptions& options) {
  validate_instance(n, k, m, options.max_n);
  BadTupleHypergraph h(n, k, m);
  const arith::FactorTable table(std::max<std::uint32_t>(n, 2));
  const std::size_t width = table.prime_count(n);

  std::vector<std::vector<std::uint8_t>> residues(n + 1);
  for (std::uint32_t x = 1; x <= n; ++x) residues[x] = dense_residues(x, m, width, table);

  if (k == 1) {
    for (std::uint32_t x = 1; x <= n; ++x) {
      const bool power = std::all_of(residues[x].begin(), residues[x].end(),
                                     [](std::uint8_t r) { return r == 0; });
      if (!power) continue;
      if (h.edge_count() >= options.edge_budget) {
        throw CapacityError("edge budget " + std::to_string(options.edge_budget) + " exceeded");
      }
      const std::uint32_t edge[1] = {x};
      h.add_edge(edge);
    }
    return h;
  }

  std::vector<std::uint32_t> elements = live_elements(n, residues);
  if (m == 2) {
    std::vector<std::uint64_t> keys;
    for (std::uint32_t x : elements) keys.push_back(arith::kernel_mask(x, table));
    TupleEnumerator<MaskOps>(MaskOps{}, elements, std::move(keys), h, options.edge_budget).run();
  } else {
    std::vector<std::vector<std::uint8_t>> keys;
    for (std::uint32_t x : elements) keys.push_back(residues[x]);
    TupleEnumerator<DenseOps>(DenseOps{m, width}, elements, std::move(keys), h,
                              options.edge_budget)
        .run();
  }
  return h;
}

std::optional<std::vector<std::uint32_t>> find_violated_edge(
    const BadTupleHypergraph& h, std::span<const std::uint32_t> members) {
  std::vector<bool> in(h.n() + 1, false);
  for (std::uint32_t x : members) {
    if (x >= 1 && x <= h.n()) in[x] = true;
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    auto edge = h.edge(e);
    if (std::all_of(edge.begin(), edge.end(), [&](std::uint32_t x) { return in[x]; })) {
      return std::vector<std::uint32_t>(edge.begin(), edge.end());
    }
  }
  return std::nullopt;
}

SubsetSolution max_independent_subset(const BadTupleHypergraph& h, Objective objective,
                                      const SolverOptions& options) {
  SubsetSolution solution;
  if (objective == Objective::kCardinality) {
    std::vector<std::int64_t> weights(h.n() + 1, 1);
    solution.members = solve_by_components(h, weights, options, solution.nodes);
  } else {
    // 1/x scaled by lcm(1..N) keeps every comparison in exact integers.
    mpz_class scale = 1;
    for (std::uint32_t x = 2; x <= h.n(); ++x) {
      mpz_lcm_ui(scale.get_mpz_t(), scale.get_mpz_t(), x);
    }
    std::vector<mpz_class> weights(h.n() + 1);
    for (std::uint32_t x = 1; x <= h.n(); ++x) weights[x] = scale / x;
    solution.members = solve_by_components(h, weights, options, solution.nodes);
  }
  solution.cardinality = solution.members.size();
  solution.weight = 0;
  for (std::uint32_t x : solution.members) solution.weight += mpq_class(1, x);
  solution.weight.canonicalize();
  solution.certificate = find_violated_edge(h, solution.members);
  solution.optimal = !solution.certificate.has_value();
  return solution;
}

std::uint64_t compute_fk(std::uint32_t n, std::uint32_t k, std::uint32_t m,
                         const ComputeOptions& options) {
  if (k == 1) {
    if (n < 1 || m < 2) throw ArgumentError("F_1 requires N >= 1 and m >= 2");
    return n - arith::integer_root(n, m);
  }
  const auto h = enumerate_bad_tuples(n, k, m, options.enumeration);
  return max_independent_subset(h, Objective::kCardinality, options.solver).cardinality;
}

mpq_class compute_lk(std::uint32_t n, std::uint32_t k, const ComputeOptions& options) {
  const auto h = enumerate_bad_tuples(n, k, 2, options.enumeration);
  return max_independent_subset(h, Objective::kReciprocalSum, options.solver).weight;
}

bool check_mono_inequality(const FkTable& values, std::uint32_t k, std::uint32_t l,
                           std::uint32_t n) {
  auto lookup = [&](std::uint32_t kk) {
    auto it = values.find({kk, n});
    if (it == values.end()) {
      throw ArgumentError("missing F_" + std::to_string(kk) + "(" + std::to_string(n) + ")");
    }
    return it->second;
  };
  const std::uint64_t combined = lookup(k + l);
  return combined <= std::max(lookup(k), lookup(l) + k);
}

std::uint64_t count_square_ksubsets(std::uint32_t n, std::uint32_t k) {
  if (n > 60 || k > 5) {
    throw CapacityError("exhaustive k-subset count limited to N <= 60, k <= 5");
  }
  EnumerationOptions options;
  options.max_n = 60;
  options.edge_budget = ~std::uint64_t{0};
  return enumerate_bad_tuples(n, k, 2, options).edge_count();
}

std::uint64_t count_squarefree(std::uint64_t n) {
  // sum over d <= sqrt(n) of mu(d) * floor(n / d^2)
  const std::uint64_t root = arith::integer_root(n, 2);
  if (root < 2) return n;
  const arith::FactorTable table(root);
  std::int64_t total = static_cast<std::int64_t>(n);
  for (std::uint64_t d = 2; d <= root; ++d) {
    const auto factors = table.factorize(d);
    if (std::any_of(factors.begin(), factors.end(), [](auto pe) { return pe.second > 1; })) {
      continue;
    }
    const std::int64_t term = static_cast<std::int64_t>(n / (d * d));
    total += factors.size() % 2 == 0 ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

mpq_class squarefree_reciprocal_sum(std::uint32_t n) {
  mpq_class sum = 0;
  if (n == 0) return sum;
  const arith::FactorTable table(std::max<std::uint32_t>(n, 2));
  for (std::uint32_t x = 1; x <= n; ++x) {
    if (x == 1 || arith::is_squarefree(x, table)) sum += mpq_class(1, x);
  }
  sum.canonicalize();
  return sum;
}

std::string rational_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::json to_json(const BadTupleHypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    auto edge = h.edge(e);
    edges.push_back(std::vector<std::uint32_t>(edge.begin(), edge.end()));
  }
  return {{"N", h.n()}, {"k", h.k()}, {"m", h.m()}, {"edges", std::move(edges)}};
}

BadTupleHypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("N").get<std::uint32_t>();
    const auto k = j.at("k").get<std::uint32_t>();
    const auto m = j.at("m").get<std::uint32_t>();
    auto edges = j.at("edges").get<std::vector<std::vector<std::uint32_t>>>();
    for (auto& edge : edges) std::sort(edge.begin(), edge.end());
    std::sort(edges.begin(), edges.end());
    BadTupleHypergraph h(n, k, m);
    for (const auto& edge : edges) {
      mpz_class product = 1;
      for (std::uint32_t x : edge) product *= x;
      if (product < 1 || !arith::is_perfect_power(product, m)) {
        throw ArgumentError("edge product is not an m-th power");
      }
      h.add_edge(edge);
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed hypergraph JSON: ") + e.what());
  }
}

nlohmann::json to_json(const SubsetSolution& s) {
  nlohmann::json j = {{"members", s.members},
                      {"cardinality", s.cardinality},
                      {"weight", rational_string(s.weight)},
                      {"optimal", s.optimal}};
  j["certificate"] = s.certificate ? nlohmann::json(*s.certificate) : nlohmann::json(nullptr);
  return j;
}

}  // namespace sqprod::exact
